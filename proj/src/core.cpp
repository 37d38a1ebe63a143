#include "newton/core.hpp"

#include <algorithm>
#include <set>

#include "newton/errors.hpp"

namespace newton {

namespace {

Vec3 unit_vec(int i) {
    Vec3 e{};
    e[std::size_t(i)] = 1;
    return e;
}

/// Rank of a set of integer row vectors, fraction-free elimination.
int rank_of(std::vector<Vec3> rows, int want) {
    int rank = 0;
    std::vector<std::pair<Vec3, int>> pivots;  // (row, pivot column)
    for (Vec3& r : rows) {
        for (const auto& [p, col] : pivots) {
            if (r[std::size_t(col)] == 0) continue;
            const Int f = r[std::size_t(col)];
            const Int g = p[std::size_t(col)];
            for (int k = 0; k < 3; ++k) r[std::size_t(k)] = r[std::size_t(k)] * g - p[std::size_t(k)] * f;
        }
        int col = -1;
        for (int k = 0; k < 3; ++k)
            if (r[std::size_t(k)] != 0) {
                col = k;
                break;
            }
        if (col < 0) continue;
        pivots.emplace_back(r, col);
        if (++rank >= want) break;
    }
    return rank;
}

bool strictly_positive(const Vec3& w, int dim) {
    for (int i = 0; i < dim; ++i)
        if (w[std::size_t(i)] <= 0) return false;
    return true;
}

}  // namespace

SupportSet make_support(int dim, std::vector<LatticePoint> points) {
    if (points.empty()) throw EmptySupportError();
    for (const LatticePoint& p : points) {
        if (p.dim != dim) throw GeometryError("support point dimension mismatch");
        for (int i = 0; i < dim; ++i)
            if (p[i] < 0) throw NotLatticeError();
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return SupportSet{dim, std::move(points)};
}

std::vector<Halfspace> candidate_halfspaces(const std::vector<LatticePoint>& points, int dim) {
    std::set<Halfspace> out;
    auto add = [&](Vec3 w) {
        // Valid inequalities of a polyhedron with orthant recession cone have
        // nonnegative normals; orient, reject mixed signs.
        bool pos = false, neg = false;
        for (const Int& x : w) {
            if (x > 0) pos = true;
            if (x < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg)
            for (Int& x : w) x = -x;
        if (!pos && !neg) return;
        w = primitive(w);
        Int offset = dot(w, points.front());
        for (const LatticePoint& p : points) offset = std::min(offset, dot(w, p));
        out.insert(Halfspace{dim, w, offset});
    };
    const std::size_t n = points.size();
    if (dim == 3) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec3 d;
                for (int k = 0; k < 3; ++k) d[std::size_t(k)] = points[j][k] - points[i][k];
                for (std::size_t k = j + 1; k < n; ++k) {
                    Vec3 e;
                    for (int t = 0; t < 3; ++t) e[std::size_t(t)] = points[k][t] - points[i][t];
                    add(cross(d, e));
                }
                for (int axis = 0; axis < 3; ++axis) add(cross(d, unit_vec(axis)));
            }
        for (int axis = 0; axis < 3; ++axis) add(unit_vec(axis));
    } else if (dim == 2) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                add(Vec3{points[j][1] - points[i][1], points[i][0] - points[j][0], 0});
        add(unit_vec(0));
        add(unit_vec(1));
    } else {
        add(unit_vec(0));
    }
    return {out.begin(), out.end()};
}

SupportSet minimal_support(const SupportSet& support) {
    SupportSet sup = make_support(support.dim, support.points);
    if (sup.points.empty()) return sup;
    // Coordinatewise-dominated points are absorbed by q + R^n_{>=0}.
    std::vector<LatticePoint> kept;
    for (const LatticePoint& p : sup.points) {
        bool dominated = false;
        for (const LatticePoint& q : sup.points) {
            if (q == p) continue;
            bool le = true;
            for (int i = 0; i < sup.dim && le; ++i) le = q[i] <= p[i];
            if (le) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(p);
    }
    // A point of the polyhedron is a vertex iff its tight constraints, within
    // a complete valid inequality system, span full rank.
    std::vector<Halfspace> cands = candidate_halfspaces(kept, sup.dim);
    std::vector<LatticePoint> vertices;
    for (const LatticePoint& p : kept) {
        std::vector<Vec3> tight;
        for (const Halfspace& h : cands)
            if (dot(h.normal, p) == h.offset) tight.push_back(h.normal);
        for (int i = 0; i < sup.dim; ++i)
            if (p[i] == 0) tight.push_back(unit_vec(i));
        if (rank_of(std::move(tight), sup.dim) == sup.dim) vertices.push_back(p);
    }
    return SupportSet{sup.dim, std::move(vertices)};
}

NewtonPolyhedron build_polyhedron(const SupportSet& support) {
    if (support.points.empty()) throw EmptySupportError();
    NewtonPolyhedron poly;
    poly.support = minimal_support(support);
    const int dim = poly.support.dim;
    const auto& pts = poly.support.points;

    if (dim >= 2) {
        std::vector<RatPoint> rpts;
        rpts.reserve(pts.size());
        for (const LatticePoint& p : pts) rpts.push_back(RatPoint::from_lattice(p));
        for (const Halfspace& h : candidate_halfspaces(pts, dim)) {
            if (!strictly_positive(h.normal, dim)) continue;
            std::vector<int> tight;
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (dot(h.normal, pts[i]) == h.offset) tight.push_back(int(i));
            if (int(tight.size()) < dim) continue;
            if (dim == 3)
                tight = order_cycle(rpts, tight, h.normal);
            else
                std::sort(tight.begin(), tight.end(),
                          [&](int a, int b) { return pts[std::size_t(a)][1] < pts[std::size_t(b)][1]; });
            poly.compact_facets.push_back(Facet{h, std::move(tight)});
        }
    }

    for (int axis = 0; axis < dim; ++axis) {
        std::optional<Int> m;
        for (const LatticePoint& p : pts) {
            bool on_axis = true;
            for (int j = 0; j < dim && on_axis; ++j)
                if (j != axis) on_axis = p[j] == 0;
            if (on_axis && (!m || p[axis] < *m)) m = p[axis];
        }
        poly.axis_intercepts[std::size_t(axis)] = m;
    }
    poly.convenient = true;
    for (int axis = 0; axis < dim; ++axis)
        if (!poly.axis_intercepts[std::size_t(axis)]) poly.convenient = false;
    return poly;
}

SupportSet restrict_support(const SupportSet& support, const std::vector<int>& axes) {
    std::vector<LatticePoint> out;
    for (const LatticePoint& p : support.points) {
        bool keep = true;
        for (int j = 0; j < support.dim && keep; ++j)
            if (std::find(axes.begin(), axes.end(), j) == axes.end()) keep = p[j] == 0;
        if (!keep) continue;
        LatticePoint q = LatticePoint::of_dim(int(axes.size()));
        for (std::size_t k = 0; k < axes.size(); ++k) q[int(k)] = p[axes[k]];
        out.push_back(q);
    }
    return make_support(int(axes.size()), std::move(out));
}

bool support_contains(const SupportSet& support, const LatticePoint& x) {
    for (int i = 0; i < support.dim; ++i)
        if (x[i] < 0) return false;
    for (const Halfspace& h : candidate_halfspaces(support.points, support.dim))
        if (dot(h.normal, x) < h.offset) return false;
    return true;
}

bool contains(const NewtonPolyhedron& poly, const LatticePoint& x) {
    for (int i = 0; i < poly.support.dim; ++i)
        if (x[i] < 0) return false;
    if (!poly.convenient) return support_contains(poly.support, x);
    // Convenient polyhedra have only compact facets and coordinate-plane
    // facets, so these inequalities are a complete description.
    for (const Facet& f : poly.compact_facets)
        if (dot(f.plane.normal, x) < f.plane.offset) return false;
    return true;
}

namespace {

GammaMinusRegion::PlaneRestriction plane_restriction_data(const SupportSet& minimal2d, int axis_a,
                                                          int axis_b) {
    GammaMinusRegion::PlaneRestriction pr;
    pr.axis_a = axis_a;
    pr.axis_b = axis_b;
    pr.area = Rat(0);
    const auto& pts = minimal2d.points;
    const LatticePoint origin2 = LatticePoint::d2(0, 0);
    if (pts.empty() || std::find(pts.begin(), pts.end(), origin2) != pts.end()) return pr;
    // The compact boundary of the 2D polyhedron is the chain of its vertices
    // ordered by increasing second coordinate, from (m_a, 0) to (0, m_b).
    pr.chain = pts;
    std::sort(pr.chain.begin(), pr.chain.end(),
              [](const LatticePoint& p, const LatticePoint& q) { return p[1] < q[1]; });
    pr.gamma_minus_cycle.push_back(RatPoint::d2(Rat(0), Rat(0)));
    for (const LatticePoint& p : pr.chain)
        pr.gamma_minus_cycle.push_back(RatPoint::d2(Rat(p[0]), Rat(p[1])));
    pr.area = polygon_area(pr.gamma_minus_cycle);
    return pr;
}

}  // namespace

GammaMinusRegion gamma_minus(const NewtonPolyhedron& poly) {
    if (poly.support.dim != 3) throw GeometryError("gamma_minus expects a 3D polyhedron");
    if (!poly.convenient) throw NotConvenientError();
    GammaMinusRegion region;
    static const std::array<std::pair<int, int>, 3> plane_axes{{{1, 2}, {0, 2}, {0, 1}}};
    const LatticePoint origin(0, 0, 0);
    if (poly.support.points.size() == 1 && poly.support.points.front() == origin) {
        region.v3 = Rat(0);
        region.v0 = 0;
        for (int i = 0; i < 3; ++i) {
            region.planes[std::size_t(i)].axis_a = plane_axes[std::size_t(i)].first;
            region.planes[std::size_t(i)].axis_b = plane_axes[std::size_t(i)].second;
            region.planes[std::size_t(i)].area = Rat(0);
        }
        return region;
    }
    for (int i = 0; i < 3; ++i) region.box[std::size_t(i)] = *poly.axis_intercepts[std::size_t(i)];

    // Every point with x_i >= m_i lies in (m_i e_i) + R^3_{>=0} and hence in
    // the polyhedron, so the box of intercepts contains the whole region.
    for (const Facet& f : poly.compact_facets) region.clipped_constraints.push_back(f.plane);
    for (int i = 0; i < 3; ++i) {
        Vec3 e{};
        e[std::size_t(i)] = 1;
        region.clipped_constraints.push_back(Halfspace{3, e, Int(0)});
        Vec3 me{};
        me[std::size_t(i)] = -1;
        region.clipped_constraints.push_back(Halfspace{3, me, -region.box[std::size_t(i)]});
    }
    region.clipped_vertices = vertex_enumeration(region.clipped_constraints);

    for (const Halfspace& h : region.clipped_constraints) {
        std::vector<int> tight;
        for (std::size_t i = 0; i < region.clipped_vertices.size(); ++i)
            if (dot(h.normal, region.clipped_vertices[i]) == Rat(h.offset)) tight.push_back(int(i));
        if (tight.size() < 3) continue;
        // Skip constraints tight only along an edge.
        bool planar = false;
        const RatPoint& p0 = region.clipped_vertices[std::size_t(tight[0])];
        const RatPoint& p1 = region.clipped_vertices[std::size_t(tight[1])];
        for (std::size_t k = 2; k < tight.size() && !planar; ++k) {
            const RatPoint& pk = region.clipped_vertices[std::size_t(tight[k])];
            RatVec3 u, v;
            for (int t = 0; t < 3; ++t) {
                u[std::size_t(t)] = p1.c[std::size_t(t)] - p0.c[std::size_t(t)];
                v[std::size_t(t)] = pk.c[std::size_t(t)] - p0.c[std::size_t(t)];
            }
            planar = u[1] * v[2] != u[2] * v[1] || u[2] * v[0] != u[0] * v[2] ||
                     u[0] * v[1] != u[1] * v[0];
        }
        if (!planar) continue;
        Vec3 outward{-h.normal[0], -h.normal[1], -h.normal[2]};
        region.clipped_facets.push_back(order_cycle(region.clipped_vertices, tight, outward));
    }

    Rat box_volume = Rat(region.box[0]) * Rat(region.box[1]) * Rat(region.box[2]);
    region.v3 = box_volume - polytope_volume_3d(region.clipped_vertices, region.clipped_facets);

    for (int i = 0; i < 3; ++i) {
        auto [a, b] = plane_axes[std::size_t(i)];
        SupportSet sub = minimal_support(restrict_support(poly.support, {a, b}));
        region.planes[std::size_t(i)] = plane_restriction_data(sub, a, b);
        region.axis_lengths[std::size_t(i)] = region.box[std::size_t(i)];
    }
    region.v0 = 1;
    return region;
}

Volumes volumes(const SupportSet& support) {
    NewtonPolyhedron poly = build_polyhedron(support);
    if (!poly.convenient) throw NotConvenientError();
    Volumes vol;
    vol.dim = poly.support.dim;
    const auto& pts = poly.support.points;
    if (vol.dim == 3) {
        GammaMinusRegion region = gamma_minus(poly);
        vol.v[3] = region.v3;
        vol.v[2] = region.planes[0].area + region.planes[1].area + region.planes[2].area;
        vol.v[1] = Rat(region.axis_lengths[0] + region.axis_lengths[1] + region.axis_lengths[2]);
        vol.v[0] = Rat(region.v0);
    } else if (vol.dim == 2) {
        const LatticePoint origin2 = LatticePoint::d2(0, 0);
        if (std::find(pts.begin(), pts.end(), origin2) != pts.end()) {
            vol.v[2] = vol.v[1] = vol.v[0] = Rat(0);
        } else {
            auto pr = plane_restriction_data(poly.support, 0, 1);
            vol.v[2] = pr.area;
            vol.v[1] = Rat(*poly.axis_intercepts[0] + *poly.axis_intercepts[1]);
            vol.v[0] = Rat(1);
        }
    } else {
        const Int m = *poly.axis_intercepts[0];
        vol.v[1] = Rat(m);
        vol.v[0] = Rat(m > 0 ? 1 : 0);
    }
    return vol;
}

Int newton_number(const SupportSet& support) {
    Volumes vol = volumes(support);
    static const Int fact[4] = {Int(1), Int(1), Int(2), Int(6)};
    Rat nu(0);
    for (int i = 0; i <= vol.dim; ++i) {
        Rat term = Rat(fact[i]) * vol.v[std::size_t(i)];
        nu += (vol.dim - i) % 2 == 0 ? term : -term;
    }
    if (!is_integer(nu)) throw PropertyCheckError("newton number is not an integer");
    return numerator(nu);
}

}  // namespace newton
