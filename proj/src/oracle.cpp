#include "newton/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "newton/errors.hpp"
#include "newton/monotonicity.hpp"

namespace newton {

namespace {

std::string describe(const SupportSet& support) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < support.points.size(); ++i) {
        if (i) os << ",";
        os << "(";
        for (int k = 0; k < support.dim; ++k) {
            if (k) os << ",";
            os << support.points[i][k];
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

std::string describe(const LatticePoint& p) {
    std::ostringstream os;
    os << "(";
    for (int k = 0; k < p.dim; ++k) {
        if (k) os << ",";
        os << p[k];
    }
    os << ")";
    return os.str();
}

}  // namespace

SupportSet random_convenient_support(const GeneratorConfig& config) {
    Xorshift64Star rng(config.seed);
    const int dim = config.dim;
    std::array<Int, 3> m{};
    std::vector<LatticePoint> pts;
    for (int i = 0; i < dim; ++i) {
        m[std::size_t(i)] = Int(1 + rng.below(std::uint64_t(config.max_intercept)));
        LatticePoint axis = LatticePoint::of_dim(dim);
        axis[i] = m[std::size_t(i)];
        pts.push_back(axis);
    }
    SupportSet current = make_support(dim, pts);
    for (int t = 0; t < config.extra_points; ++t) {
        LatticePoint p = LatticePoint::of_dim(dim);
        for (int i = 0; i < dim; ++i)
            p[i] = Int(rng.below(m[std::size_t(i)].convert_to<std::uint64_t>() + 1));
        bool absorbs = false;
        for (const LatticePoint& q : current.points) {
            bool le = true;
            for (int i = 0; i < dim && le; ++i) le = p[i] <= q[i];
            if (le) {
                absorbs = true;
                break;
            }
        }
        if (absorbs || support_contains(current, p)) continue;
        current.points.push_back(p);
        current = make_support(dim, current.points);
    }
    return minimal_support(current);
}

namespace {

/// Area of the polyhedron-in-box slice at height z: the box rectangle clipped
/// by every compact-facet halfspace with z substituted.
Rat slice_area(const GammaMinusRegion& region, const Rat& z) {
    const Rat m1(region.box[0]), m2(region.box[1]);
    std::vector<RatPoint> poly{RatPoint::d2(Rat(0), Rat(0)), RatPoint::d2(m1, Rat(0)),
                               RatPoint::d2(m1, m2), RatPoint::d2(Rat(0), m2)};
    for (const Halfspace& h : region.clipped_constraints) {
        if (h.normal[0] <= 0 || h.normal[1] <= 0 || h.normal[2] <= 0) continue;
        poly = clip_polygon(poly, h.normal[0], h.normal[1], Rat(h.offset) - Rat(h.normal[2]) * z);
        if (poly.size() < 3) return Rat(0);
    }
    return polygon_area(poly);
}

}  // namespace

Rat volume_slab(const GammaMinusRegion& region) {
    if (region.v0 == 0) return Rat(0);
    std::set<Rat> breaks{Rat(0), Rat(region.box[2])};
    for (const RatPoint& v : region.clipped_vertices) breaks.insert(v.c[2]);
    const Rat rect = Rat(region.box[0]) * Rat(region.box[1]);
    Rat total(0);
    auto it = breaks.begin();
    Rat z0 = *it++;
    for (; it != breaks.end(); ++it) {
        const Rat z1 = *it;
        const Rat zm = (z0 + z1) / 2;
        // Cross sections are quadratic in z inside a slab, so Simpson is exact.
        const Rat a0 = rect - slice_area(region, z0);
        const Rat am = rect - slice_area(region, zm);
        const Rat a1 = rect - slice_area(region, z1);
        total += (z1 - z0) / 6 * (a0 + 4 * am + a1);
        z0 = z1;
    }
    return total;
}

Rat area_slab(const GammaMinusRegion::PlaneRestriction& pr, const Int& m_a, const Int& m_b) {
    if (pr.chain.empty()) return Rat(0);
    struct Edge {
        Int a, b, c;  // a*x + b*y >= c, a > 0, b > 0
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < pr.chain.size(); ++i) {
        const LatticePoint& p = pr.chain[i];
        const LatticePoint& q = pr.chain[i + 1];
        Edge e{q[1] - p[1], p[0] - q[0], Int(0)};
        e.c = e.a * p[0] + e.b * p[1];
        edges.push_back(std::move(e));
    }
    // Slice length at x: the chain is the lower boundary of the clipped
    // polyhedron, a max of linear lower bounds on y with kinks at vertex x's.
    auto len = [&](const Rat& x) {
        Rat lo(0);
        for (const Edge& e : edges) lo = std::max(lo, (Rat(e.c) - Rat(e.a) * x) / Rat(e.b));
        return Rat(m_b) - lo;
    };
    std::set<Rat> breaks;
    for (const LatticePoint& p : pr.chain) breaks.insert(Rat(p[0]));
    Rat above(0);
    auto it = breaks.begin();
    Rat x0 = *it++;
    for (; it != breaks.end(); ++it) {
        const Rat x1 = *it;
        above += (x1 - x0) * (len(x0) + len(x1)) / 2;
        x0 = x1;
    }
    return Rat(m_a) * Rat(m_b) - above;
}

Int nu_oracle(const SupportSet& support) {
    NewtonPolyhedron poly = build_polyhedron(support);
    if (poly.support.dim != 3) throw GeometryError("nu_oracle expects a 3D support");
    if (!poly.convenient) throw NotConvenientError();
    GammaMinusRegion region = gamma_minus(poly);
    if (region.v0 == 0) return Int(0);
    Rat v3 = volume_slab(region);
    Rat v2(0);
    for (const auto& pr : region.planes)
        v2 += area_slab(pr, region.box[std::size_t(pr.axis_a)], region.box[std::size_t(pr.axis_b)]);
    Rat v1 = Rat(region.box[0] + region.box[1] + region.box[2]);
    Rat nu = 6 * v3 - 2 * v2 + v1 - 1;
    if (!is_integer(nu)) throw PropertyCheckError("oracle newton number is not an integer");
    return numerator(nu);
}

CrossCheckReport cross_check(const GeneratorConfig& config, int iterations) {
    CrossCheckReport report;
    report.base_seed = config.seed;
    report.iterations = iterations;
    for (int it = 0; it < iterations; ++it) {
        GeneratorConfig cfg = config;
        cfg.seed = config.seed + std::uint64_t(it);
        SupportSet support = random_convenient_support(cfg);
        ++report.supports_checked;
        auto fail = [&](const std::string& what, const LatticePoint* p = nullptr) {
            std::ostringstream os;
            os << "seed=" << cfg.seed << " A=" << describe(support);
            if (p) os << " P=" << describe(*p);
            os << ": " << what;
            report.failures.push_back(os.str());
        };
        try {
            NewtonPolyhedron poly = build_polyhedron(support);
            GammaMinusRegion region = gamma_minus(poly);
            const Int nu = newton_number(support);

            if (nu_oracle(support) != nu) fail("oracle newton number disagrees");
            if (volume_slab(region) != region.v3) fail("slab V3 disagrees with fan V3");
            for (const auto& pr : region.planes)
                if (area_slab(pr, region.box[std::size_t(pr.axis_a)],
                              region.box[std::size_t(pr.axis_b)]) != pr.area)
                    fail("slab V2 disagrees with shoelace V2");
            if (nu < 0) fail("negative newton number");
            NuZeroWitness w = nu_zero_witness(support);
            if ((w.kind != NuZeroKind::Positive) != (nu == 0))
                fail("zero witness disagrees with newton number");

            // Independent point stream so the support fixture stays stable.
            Xorshift64Star prng(cfg.seed ^ 0xD1B54A32D192ED03ULL);
            LatticePoint p = LatticePoint::of_dim(3);
            bool found = false;
            for (int attempt = 0; attempt < 64 && !found; ++attempt) {
                for (int i = 0; i < 3; ++i)
                    p[i] = Int(prng.below(
                        poly.axis_intercepts[std::size_t(i)]->convert_to<std::uint64_t>()));
                found = !contains(poly, p);
            }
            if (!found) p = LatticePoint(0, 0, 0);  // the origin is always under
            ++report.points_checked;

            const Int nu_after = newton_number(add_point(support, p));
            if (nu_after > nu) fail("monotonicity violated", &p);
            const bool preserved = nu_after == nu;
            auto pyr = is_unit_pyramid(poly, p);
            if (pyr.has_value() != preserved) fail("pyramid criterion disagrees with equality", &p);
            Classification cls = classify(poly, p);
            if (cls.equal != preserved) fail("classification disagrees with equality", &p);
            if (cls.equal) {
                ++report.equal_cases;
                if (cls.witness->apex[cls.witness->plane_axis] != 1) fail("equal apex height != 1", &p);
            } else {
                ++report.strict_cases;
                bool off_planes = p[0] > 0 && p[1] > 0 && p[2] > 0;
                if (cls.interior_point != off_planes) fail("interior tag disagrees", &p);
                for (const PlaneReason& r : cls.reasons) {
                    if (r.multi_apex && r.off_count < 2) fail("multi-apex count < 2", &p);
                    if (!r.multi_apex && r.height < 2) fail("single-apex height < 2", &p);
                }
            }
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
    }
    return report;
}

}  // namespace newton
