#include "newton/monotonicity.hpp"

#include <algorithm>

#include "newton/errors.hpp"

namespace newton {

namespace {

void require_lattice(const LatticePoint& p) {
    for (int i = 0; i < p.dim; ++i)
        if (p[i] < 0) throw NotLatticeError();
}

}  // namespace

SupportSet add_point(const SupportSet& support, const LatticePoint& p) {
    if (p.dim != support.dim) throw GeometryError("point dimension mismatch");
    require_lattice(p);
    if (support_contains(support, p)) throw PointInPolyhedronError();
    std::vector<LatticePoint> pts = support.points;
    pts.push_back(p);
    return minimal_support(SupportSet{support.dim, std::move(pts)});
}

DifferenceSkeleton difference_skeleton(const NewtonPolyhedron& poly, const LatticePoint& p) {
    require_lattice(p);
    if (contains(poly, p)) throw PointInPolyhedronError();
    DifferenceSkeleton sk;
    sk.vertex_set.push_back(p);
    for (std::size_t fi = 0; fi < poly.compact_facets.size(); ++fi) {
        const Facet& f = poly.compact_facets[fi];
        if (dot(f.plane.normal, p) < f.plane.offset) {
            sk.visible_facets.push_back(int(fi));
            for (int vi : f.vertices) sk.vertex_set.push_back(poly.support.points[std::size_t(vi)]);
        }
    }
    std::sort(sk.vertex_set.begin(), sk.vertex_set.end());
    sk.vertex_set.erase(std::unique(sk.vertex_set.begin(), sk.vertex_set.end()),
                        sk.vertex_set.end());
    for (int axis = 2; axis >= 0; --axis) {
        if (p[axis] != 0) continue;
        DifferenceSkeleton::PlaneData pd;
        pd.axis = axis;
        for (const LatticePoint& v : sk.vertex_set)
            if (v[axis] > 0) pd.off_plane.push_back(v);
        sk.planes.push_back(std::move(pd));
    }
    return sk;
}

std::optional<UnitPyramid> is_unit_pyramid(const NewtonPolyhedron& poly, const LatticePoint& p) {
    DifferenceSkeleton sk = difference_skeleton(poly, p);
    // A single off-plane vertex Q forces the pyramid structure: no compact
    // facet lies in a coordinate plane, so every visible facet has a vertex
    // off the plane, which must be Q; the difference is then cone(base, Q).
    for (const auto& pd : sk.planes)
        if (pd.off_plane.size() == 1 && pd.off_plane.front()[pd.axis] == 1)
            return UnitPyramid{pd.axis, pd.off_plane.front()};
    return std::nullopt;
}

Classification classify(const NewtonPolyhedron& poly, const LatticePoint& p) {
    Classification cls;
    DifferenceSkeleton sk = difference_skeleton(poly, p);
    for (const auto& pd : sk.planes) {
        if (pd.off_plane.size() == 1 && pd.off_plane.front()[pd.axis] == 1) {
            cls.equal = true;
            cls.witness = UnitPyramid{pd.axis, pd.off_plane.front()};
            return cls;
        }
    }
    if (sk.planes.empty()) {
        cls.interior_point = true;
        return cls;
    }
    for (const auto& pd : sk.planes) {
        PlaneReason reason;
        reason.axis = pd.axis;
        reason.off_count = int(pd.off_plane.size());
        reason.multi_apex = pd.off_plane.size() >= 2;
        reason.height = pd.off_plane.size() == 1 ? pd.off_plane.front()[pd.axis] : Int(0);
        if (!reason.multi_apex && reason.height < 2)
            throw PropertyCheckError("strict classification with a unit-height single apex");
        cls.reasons.push_back(std::move(reason));
    }
    return cls;
}

NuDropResult nu_drop(const SupportSet& support, const std::vector<LatticePoint>& points) {
    NuDropResult res;
    res.total = 0;
    SupportSet current = minimal_support(support);
    Int nu_before = newton_number(current);
    for (const LatticePoint& p : points) {
        require_lattice(p);
        if (support_contains(current, p)) {
            res.steps.emplace_back(0);
            res.skipped.push_back(true);
            continue;
        }
        current = add_point(current, p);
        Int nu_after = newton_number(current);
        res.steps.push_back(nu_before - nu_after);
        res.skipped.push_back(false);
        res.total += nu_before - nu_after;
        nu_before = nu_after;
    }
    res.final_support = std::move(current);
    return res;
}

std::vector<EqualWitness> enumerate_equal(const SupportSet& support) {
    NewtonPolyhedron poly = build_polyhedron(support);
    if (!poly.convenient) throw NotConvenientError();
    const Int nu0 = newton_number(poly.support);
    std::vector<EqualWitness> out;
    const Int mx = *poly.axis_intercepts[0];
    const Int my = *poly.axis_intercepts[1];
    const Int mz = *poly.axis_intercepts[2];
    for (Int x = 0; x <= mx; ++x)
        for (Int y = 0; y <= my; ++y)
            for (Int z = 0; z <= mz; ++z) {
                LatticePoint p(x, y, z);
                if (contains(poly, p)) continue;
                auto pyr = is_unit_pyramid(poly, p);
                if (!pyr) continue;
                if (newton_number(add_point(poly.support, p)) != nu0)
                    throw PropertyCheckError(
                        "unit-pyramid point does not preserve the newton number");
                out.push_back(EqualWitness{p, pyr->plane_axis, pyr->apex});
            }
    return out;
}

NuZeroWitness nu_zero_witness(const SupportSet& support) {
    NewtonPolyhedron poly = build_polyhedron(support);
    if (!poly.convenient) throw NotConvenientError();
    const LatticePoint origin = LatticePoint::of_dim(poly.support.dim);
    if (std::find(poly.support.points.begin(), poly.support.points.end(), origin) !=
        poly.support.points.end())
        return NuZeroWitness{NuZeroKind::Empty};
    for (int axis = 0; axis < poly.support.dim; ++axis)
        if (*poly.axis_intercepts[std::size_t(axis)] == 1)
            return NuZeroWitness{NuZeroKind::AxisIntercept, axis};
    return NuZeroWitness{NuZeroKind::Positive};
}

}  // namespace newton
