#pragma once

#include <array>
#include <optional>
#include <vector>

#include "newton/geom.hpp"

namespace newton {

/// Finite set of lattice points generating a Newton polyhedron. After
/// minimalization the points are exactly the vertices of the polyhedron.
struct SupportSet {
    int dim = 3;
    std::vector<LatticePoint> points;  // sorted lexicographically, unique
};

SupportSet make_support(int dim, std::vector<LatticePoint> points);

/// Drop duplicates, coordinatewise-dominated points and non-extreme points.
SupportSet minimal_support(const SupportSet& support);

struct Facet {
    Halfspace plane;            // strictly positive primitive normal
    std::vector<int> vertices;  // indices into support.points; cyclic for dim 3
};

struct NewtonPolyhedron {
    SupportSet support;  // minimal: the vertex set
    std::vector<Facet> compact_facets;
    std::array<std::optional<Int>, 3> axis_intercepts;
    bool convenient = false;
};

NewtonPolyhedron build_polyhedron(const SupportSet& support);

/// Keep only points whose coordinates vanish outside `axes`, reindexed into
/// dimension axes.size(). A convex combination of points with nonnegative
/// omitted coordinates has those coordinates zero iff every contributor does,
/// so this generates exactly the restriction of the polyhedron.
SupportSet restrict_support(const SupportSet& support, const std::vector<int>& axes);

/// Exact membership in the (possibly non-convenient) polyhedron generated by
/// `support`. Works for any dimension <= 3.
bool support_contains(const SupportSet& support, const LatticePoint& x);

/// Membership using the precomputed facet description (fast path for
/// convenient polyhedra, falls back to support_contains otherwise).
bool contains(const NewtonPolyhedron& poly, const LatticePoint& x);

/// Valid inequality system for the polyhedron generated by `points`: contains
/// every facet-defining halfspace (and possibly redundant valid ones).
std::vector<Halfspace> candidate_halfspaces(const std::vector<LatticePoint>& points, int dim);

/// The region between the polyhedron and the origin, clipped to the box of
/// axis intercepts, with its coordinate-plane restrictions.
struct GammaMinusRegion {
    std::array<Int, 3> box{};                     // [0, m_i] per axis
    std::vector<Halfspace> clipped_constraints;   // facets plus box planes
    std::vector<RatPoint> clipped_vertices;       // of polyhedron ∩ box
    std::vector<std::vector<int>> clipped_facets; // outward-oriented cycles
    Rat v3;

    struct PlaneRestriction {
        int axis_a = 0, axis_b = 1;            // plane axes, increasing
        std::vector<LatticePoint> chain;       // 2D polyhedron vertices by increasing second coord
        std::vector<RatPoint> gamma_minus_cycle;  // (0,0), chain..., simple ccw polygon
        Rat area;                              // of the 2D region under the chain
    };
    std::array<PlaneRestriction, 3> planes{};  // index = omitted axis
    std::array<Int, 3> axis_lengths{};
    int v0 = 0;
};

GammaMinusRegion gamma_minus(const NewtonPolyhedron& poly);

struct Volumes {
    int dim = 3;
    std::array<Rat, 4> v{};  // v[i] = V_i
};

/// V_n .. V_0 for a convenient support of dimension n.
Volumes volumes(const SupportSet& support);

/// nu = sum (-1)^(n-i) i! V_i, always an integer for lattice polyhedra.
Int newton_number(const SupportSet& support);

}  // namespace newton
