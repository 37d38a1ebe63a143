#pragma once

#include <array>
#include <vector>

#include "newton/rational.hpp"

namespace newton {

using Vec3 = std::array<Int, 3>;
using RatVec3 = std::array<Rat, 3>;

/// Lattice point in N0^n, n in {1,2,3}. Coordinates beyond `dim` stay zero.
struct LatticePoint {
    int dim = 3;
    Vec3 c{};

    LatticePoint() = default;
    LatticePoint(Int x, Int y, Int z) : dim(3), c{std::move(x), std::move(y), std::move(z)} {}

    static LatticePoint of_dim(int n) {
        LatticePoint p;
        p.dim = n;
        return p;
    }
    static LatticePoint d2(Int x, Int y) {
        LatticePoint p;
        p.dim = 2;
        p.c[0] = std::move(x);
        p.c[1] = std::move(y);
        return p;
    }
    static LatticePoint d1(Int x) {
        LatticePoint p;
        p.dim = 1;
        p.c[0] = std::move(x);
        return p;
    }

    const Int& operator[](int i) const { return c[std::size_t(i)]; }
    Int& operator[](int i) { return c[std::size_t(i)]; }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.dim == b.dim && a.c == b.c;
    }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.c < b.c; }
};

/// Point with exact rational coordinates (hull and slice vertices).
struct RatPoint {
    int dim = 3;
    RatVec3 c{};

    RatPoint() = default;
    RatPoint(Rat x, Rat y, Rat z) : dim(3), c{std::move(x), std::move(y), std::move(z)} {}

    static RatPoint d2(Rat x, Rat y) {
        RatPoint p;
        p.dim = 2;
        p.c[0] = std::move(x);
        p.c[1] = std::move(y);
        return p;
    }
    static RatPoint from_lattice(const LatticePoint& p) {
        RatPoint q;
        q.dim = p.dim;
        for (int i = 0; i < 3; ++i) q.c[std::size_t(i)] = Rat(p.c[std::size_t(i)]);
        return q;
    }

    const Rat& operator[](int i) const { return c[std::size_t(i)]; }
    Rat& operator[](int i) { return c[std::size_t(i)]; }

    friend bool operator==(const RatPoint& a, const RatPoint& b) {
        return a.dim == b.dim && a.c == b.c;
    }
    friend bool operator<(const RatPoint& a, const RatPoint& b) { return a.c < b.c; }
};

/// Closed halfspace {x : <normal, x> >= offset} with primitive integer normal.
struct Halfspace {
    int dim = 3;
    Vec3 normal{};
    Int offset{};

    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.dim == b.dim && a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

Int det2(const Int& ax, const Int& ay, const Int& bx, const Int& by);
Int det3(const Vec3& a, const Vec3& b, const Vec3& c);
Vec3 cross(const Vec3& a, const Vec3& b);
Int dot(const Vec3& a, const Vec3& b);
Int dot(const Vec3& w, const LatticePoint& p);
Rat dot(const Vec3& w, const RatPoint& p);

/// Divide out the gcd of the entries; zero vector stays zero.
Vec3 primitive(Vec3 v);

struct Hull2D {
    std::vector<RatPoint> vertices;  // counterclockwise cycle (dimension 2), endpoints (1), point (0)
    int dimension = 0;
};

Hull2D convex_hull_2d(std::vector<RatPoint> points);

/// Exact shoelace area of a simple polygon cycle; fewer than 3 vertices gives 0.
Rat polygon_area(const std::vector<RatPoint>& cycle);

/// Exact volume of a convex 3-polytope from consistently oriented facet cycles:
/// (1/6) |sum over facet fans of det3(v_a, v_b, v_c)|.
Rat polytope_volume_3d(const std::vector<RatPoint>& vertices,
                       const std::vector<std::vector<int>>& facets);

/// All vertices of a bounded full-dimensional halfspace intersection in R^3,
/// deduplicated and sorted. Throws GeometryError when the intersection is empty
/// (boundedness is the caller's contract).
std::vector<RatPoint> vertex_enumeration(const std::vector<Halfspace>& halfspaces);

/// Clip a convex polygon (ccw cycle, 2D points) against a*x + b*y >= c.
std::vector<RatPoint> clip_polygon(const std::vector<RatPoint>& poly, const Int& a, const Int& b,
                                   const Rat& c);

/// Order coplanar points (indices into `points`) into a cycle that is
/// counterclockwise when viewed from the tip of `normal`.
std::vector<int> order_cycle(const std::vector<RatPoint>& points, std::vector<int> idx,
                             const Vec3& normal);

}  // namespace newton
