#include "newton/geom.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "newton/errors.hpp"

namespace newton {

Int det2(const Int& ax, const Int& ay, const Int& bx, const Int& by) { return ax * by - ay * bx; }

Int det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Int dot(const Vec3& w, const LatticePoint& p) { return dot(w, p.c); }

Rat dot(const Vec3& w, const RatPoint& p) {
    return Rat(w[0]) * p.c[0] + Rat(w[1]) * p.c[1] + Rat(w[2]) * p.c[2];
}

Vec3 primitive(Vec3 v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

namespace {

Rat det3q(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    return a.c[0] * (b.c[1] * c.c[2] - b.c[2] * c.c[1]) -
           a.c[1] * (b.c[0] * c.c[2] - b.c[2] * c.c[0]) +
           a.c[2] * (b.c[0] * c.c[1] - b.c[1] * c.c[0]);
}

RatVec3 crossq(const RatVec3& a, const RatVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dotq(const RatVec3& a, const RatVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Rat cross2(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
    return (a.c[0] - o.c[0]) * (b.c[1] - o.c[1]) - (a.c[1] - o.c[1]) * (b.c[0] - o.c[0]);
}

}  // namespace

Hull2D convex_hull_2d(std::vector<RatPoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Hull2D hull;
    if (points.empty()) return hull;
    if (points.size() == 1) {
        hull.vertices = points;
        hull.dimension = 0;
        return hull;
    }
    const std::size_t n = points.size();
    std::vector<RatPoint> ring(2 * n);
    std::size_t k = 0;
    // Andrew monotone chain; strict turns only, so collinear interior points drop out.
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(ring[k - 2], ring[k - 1], points[i]) <= 0) --k;
        ring[k++] = points[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross2(ring[k - 2], ring[k - 1], points[i]) <= 0) --k;
        ring[k++] = points[i];
    }
    ring.resize(k - 1);
    hull.vertices = std::move(ring);
    hull.dimension = hull.vertices.size() >= 3 ? 2 : 1;
    return hull;
}

Rat polygon_area(const std::vector<RatPoint>& cycle) {
    if (cycle.size() < 3) return Rat(0);
    Rat twice(0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const RatPoint& p = cycle[i];
        const RatPoint& q = cycle[(i + 1) % cycle.size()];
        twice += p.c[0] * q.c[1] - q.c[0] * p.c[1];
    }
    return boost::multiprecision::abs(twice) / 2;
}

Rat polytope_volume_3d(const std::vector<RatPoint>& vertices,
                       const std::vector<std::vector<int>>& facets) {
    Rat six(0);
    for (const auto& f : facets) {
        if (f.size() < 3) continue;
        for (std::size_t i = 1; i + 1 < f.size(); ++i)
            six += det3q(vertices[std::size_t(f[0])], vertices[std::size_t(f[i])],
                         vertices[std::size_t(f[i + 1])]);
    }
    return boost::multiprecision::abs(six) / 6;
}

std::vector<RatPoint> vertex_enumeration(const std::vector<Halfspace>& halfspaces) {
    const std::size_t n = halfspaces.size();
    std::set<std::array<Int, 4>> seen;
    std::vector<RatPoint> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec3& a = halfspaces[i].normal;
                const Vec3& b = halfspaces[j].normal;
                const Vec3& c = halfspaces[k].normal;
                Int d = det3(a, b, c);
                if (d == 0) continue;
                const Int& ca = halfspaces[i].offset;
                const Int& cb = halfspaces[j].offset;
                const Int& cc = halfspaces[k].offset;
                // Cramer columns; integer arithmetic throughout.
                Int x = det3({ca, a[1], a[2]}, {cb, b[1], b[2]}, {cc, c[1], c[2]});
                Int y = det3({a[0], ca, a[2]}, {b[0], cb, b[2]}, {c[0], cc, c[2]});
                Int z = det3({a[0], a[1], ca}, {b[0], b[1], cb}, {c[0], c[1], cc});
                bool ok = true;
                for (const Halfspace& h : halfspaces) {
                    Int v = h.normal[0] * x + h.normal[1] * y + h.normal[2] * z - h.offset * d;
                    if ((d > 0 && v < 0) || (d < 0 && v > 0)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                if (d < 0) {
                    x = -x;
                    y = -y;
                    z = -z;
                    d = -d;
                }
                Int g = boost::multiprecision::gcd(
                    boost::multiprecision::gcd(boost::multiprecision::abs(x),
                                               boost::multiprecision::abs(y)),
                    boost::multiprecision::gcd(boost::multiprecision::abs(z), d));
                if (g > 1) {
                    x /= g;
                    y /= g;
                    z /= g;
                    d /= g;
                }
                if (seen.insert({x, y, z, d}).second)
                    out.emplace_back(Rat(x, d), Rat(y, d), Rat(z, d));
            }
    if (out.empty()) throw GeometryError("halfspace intersection has no vertices");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RatPoint> clip_polygon(const std::vector<RatPoint>& poly, const Int& a, const Int& b,
                                   const Rat& c) {
    std::vector<RatPoint> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& p = poly[i];
        const RatPoint& q = poly[(i + 1) % n];
        Rat fp = Rat(a) * p.c[0] + Rat(b) * p.c[1] - c;
        Rat fq = Rat(a) * q.c[0] + Rat(b) * q.c[1] - c;
        bool in_p = fp >= 0;
        bool in_q = fq >= 0;
        if (in_p) out.push_back(p);
        if (in_p != in_q) {
            Rat t = fp / (fp - fq);
            out.push_back(RatPoint::d2(p.c[0] + t * (q.c[0] - p.c[0]),
                                       p.c[1] + t * (q.c[1] - p.c[1])));
        }
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

std::vector<int> order_cycle(const std::vector<RatPoint>& points, std::vector<int> idx,
                             const Vec3& normal) {
    if (idx.size() <= 2) return idx;
    RatVec3 centroid{Rat(0), Rat(0), Rat(0)};
    for (int i : idx)
        for (int k = 0; k < 3; ++k) centroid[std::size_t(k)] += points[std::size_t(i)].c[std::size_t(k)];
    for (int k = 0; k < 3; ++k) centroid[std::size_t(k)] /= int(idx.size());
    RatVec3 nq{Rat(normal[0]), Rat(normal[1]), Rat(normal[2])};
    auto rel = [&](int i) {
        RatVec3 v;
        for (int k = 0; k < 3; ++k)
            v[std::size_t(k)] = points[std::size_t(i)].c[std::size_t(k)] - centroid[std::size_t(k)];
        return v;
    };
    RatVec3 ref = rel(idx[0]);
    // Half-plane bucket around the reference direction, then exact cross sign within a bucket.
    auto half = [&](const RatVec3& v) {
        Rat t = dotq(crossq(ref, v), nq);
        if (t > 0) return 0;
        if (t < 0) return 1;
        return dotq(ref, v) > 0 ? 0 : 1;
    };
    std::sort(idx.begin(), idx.end(), [&](int ia, int ib) {
        RatVec3 va = rel(ia), vb = rel(ib);
        int ha = half(va), hb = half(vb);
        if (ha != hb) return ha < hb;
        return dotq(crossq(va, vb), nq) > 0;
    });
    return idx;
}

}  // namespace newton
