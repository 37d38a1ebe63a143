// Acceptance suite: seven criteria, each printed as a single PASS/FAIL line.
// All comparisons are exact integer/rational equalities; there are no
// tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <set>
#include <vector>

#include "newton/monotonicity.hpp"
#include "newton/oracle.hpp"

using namespace newton;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed = 0;

void report(int index, const char* name, bool ok, double seconds, long violations = -1) {
    if (!ok) ++g_failed;
    if (violations >= 0)
        std::printf("%s  %d. %s (%.2f s, %ld violations)\n", ok ? "PASS" : "FAIL", index, name,
                    seconds, violations);
    else
        std::printf("%s  %d. %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, name, seconds);
}

SupportSet fermat(long long a, long long b, long long c) {
    return make_support(3, {LatticePoint(a, 0, 0), LatticePoint(0, b, 0), LatticePoint(0, 0, c)});
}

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion_1() {
    auto t0 = Clock::now();
    SupportSet A = make_support(3, {LatticePoint(6, 0, 0), LatticePoint(0, 6, 0),
                                    LatticePoint(2, 0, 1), LatticePoint(0, 2, 1),
                                    LatticePoint(0, 0, 4)});
    LatticePoint P(3, 2, 0);
    bool ok = newton_number(A) == 15;
    ok = ok && newton_number(add_point(A, P)) == 13;
    Classification cls = classify(build_polyhedron(A), P);
    ok = ok && !cls.equal && !cls.interior_point && cls.reasons.size() == 1;
    ok = ok && cls.reasons[0].axis == 2 && cls.reasons[0].multi_apex && cls.reasons[0].off_count == 2;
    double dt = elapsed(t0);
    report(1, "paper example regression, nu 15 -> 13, multi-apex 2", ok && dt < 1.0, dt);
}

void criterion_2() {
    auto t0 = Clock::now();
    long violations = 0;
    for (long long a = 1; a <= 8; ++a)
        for (long long b = 1; b <= 8; ++b)
            for (long long c = 1; c <= 8; ++c)
                if (newton_number(fermat(a, b, c)) != (a - 1) * (b - 1) * (c - 1)) ++violations;
    double dt = elapsed(t0);
    report(2, "Fermat family nu = (a-1)(b-1)(c-1) on the 8x8x8 grid", violations == 0 && dt < 5.0,
           dt, violations);
}

// Criteria 3-5 share one population: 1000 seeded supports (M=12, k <= 6),
// up to 20 random points under each polyhedron.
void criteria_3_4_5() {
    auto t0 = Clock::now();
    long mono_viol = 0, equiv_viol = 0;        // criterion 3
    long nonneg_viol = 0, witness_viol = 0;    // criterion 4
    long oracle_viol = 0;                      // criterion 5
    long points_total = 0;

    for (int it = 0; it < 1000; ++it) {
        GeneratorConfig cfg;
        cfg.seed = 42 + std::uint64_t(it);
        cfg.max_intercept = 12;
        cfg.extra_points = it % 7;
        SupportSet A = random_convenient_support(cfg);
        NewtonPolyhedron poly = build_polyhedron(A);
        GammaMinusRegion region = gamma_minus(poly);
        const Int nu = newton_number(A);

        if (nu_oracle(A) != nu) ++oracle_viol;
        if (volume_slab(region) != region.v3) ++oracle_viol;
        for (const auto& pr : region.planes)
            if (area_slab(pr, region.box[std::size_t(pr.axis_a)],
                          region.box[std::size_t(pr.axis_b)]) != pr.area)
                ++oracle_viol;

        if (nu < 0) ++nonneg_viol;
        if ((nu_zero_witness(A).kind != NuZeroKind::Positive) != (nu == 0)) ++witness_viol;

        Xorshift64Star prng(cfg.seed * 0x9E3779B97F4A7C15ULL + 1);
        std::set<LatticePoint> seen;
        for (int attempt = 0; attempt < 80 && int(seen.size()) < 20; ++attempt) {
            LatticePoint p;
            for (int i = 0; i < 3; ++i)
                p[i] = Int(prng.below(
                    poly.axis_intercepts[std::size_t(i)]->convert_to<std::uint64_t>() + 1));
            if (contains(poly, p) || !seen.insert(p).second) continue;
            ++points_total;
            const Int nu_after = newton_number(add_point(A, p));
            if (nu_after > nu) ++mono_viol;
            if (is_unit_pyramid(poly, p).has_value() != (nu_after == nu)) ++equiv_viol;
        }
    }
    double dt = elapsed(t0);
    std::printf("      population: 1000 supports, %ld points under Gamma_plus\n", points_total);
    report(3, "monotonicity and pyramid <=> equality, exact", mono_viol + equiv_viol == 0 && dt < 120.0,
           dt, mono_viol + equiv_viol);
    report(4, "corollary: nu >= 0 and zero-witness <=> nu = 0 (same population)",
           nonneg_viol + witness_viol == 0, dt, nonneg_viol + witness_viol);
    report(5, "slab oracle V3/V2/nu agreement (same population)", oracle_viol == 0, dt,
           oracle_viol);
}

void criterion_6() {
    auto t0 = Clock::now();
    long violations = 0;
    Xorshift64Star rng(2024);
    int done = 0;
    while (done < 200) {
        std::vector<RatPoint> raw;
        const int n = 3 + int(rng.below(6));
        for (int i = 0; i < n; ++i)
            raw.push_back(RatPoint::d2(Rat(long(rng.below(11))), Rat(long(rng.below(11)))));
        Hull2D hull = convex_hull_2d(raw);
        if (hull.dimension != 2) continue;
        ++done;
        const Rat h(1 + long(rng.below(7)));
        RatPoint apex(Rat(long(rng.below(11))), Rat(long(rng.below(11))), h);
        std::vector<RatPoint> verts;
        for (const RatPoint& b : hull.vertices) verts.emplace_back(b[0], b[1], Rat(0));
        verts.push_back(apex);
        const int m = int(hull.vertices.size());
        std::vector<std::vector<int>> facets;
        std::vector<int> base;
        for (int i = m - 1; i >= 0; --i) base.push_back(i);
        facets.push_back(base);
        for (int i = 0; i < m; ++i) facets.push_back({i, (i + 1) % m, m});
        if (polytope_volume_3d(verts, facets) != polygon_area(hull.vertices) * h / 3) ++violations;
    }
    report(6, "200 random pyramids: volume = base * height / 3", violations == 0, elapsed(t0),
           violations);
}

void criterion_7() {
    auto t0 = Clock::now();
    bool ok = true;

    // (i) P on a coordinate plane, off the axes.
    {
        SupportSet A = fermat(2, 2, 1);
        LatticePoint P(1, 0, 0);
        Classification cls = classify(build_polyhedron(A), P);
        ok = ok && cls.equal && cls.witness->plane_axis == 2 &&
             cls.witness->apex == LatticePoint(0, 0, 1);
        ok = ok && newton_number(add_point(A, P)) == newton_number(A);
    }
    // (ii) P on an axis: the apex lies in a coordinate plane containing that axis.
    {
        SupportSet A = fermat(1, 1, 2);
        LatticePoint P(0, 0, 1);
        Classification cls = classify(build_polyhedron(A), P);
        ok = ok && cls.equal;
        ok = ok && (cls.witness->apex[0] == 0 || cls.witness->apex[1] == 0);
        ok = ok && newton_number(add_point(A, P)) == newton_number(A);
    }
    // (iii) P = 0: the apex is a unit axis vector.
    {
        SupportSet A = fermat(1, 1, 1);
        LatticePoint P(0, 0, 0);
        Classification cls = classify(build_polyhedron(A), P);
        const LatticePoint& q = cls.witness.has_value() ? cls.witness->apex : P;
        ok = ok && cls.equal;
        ok = ok && (q == LatticePoint(1, 0, 0) || q == LatticePoint(0, 1, 0) ||
                    q == LatticePoint(0, 0, 1));
        ok = ok && newton_number(add_point(A, P)) == newton_number(A);
    }
    report(7, "edge cases: P on plane / on axis / at origin, apex locations", ok, elapsed(t0));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criteria_3_4_5();
    criterion_6();
    criterion_7();
    if (g_failed) std::printf("%d criterion(s) FAILED\n", g_failed);
    else std::printf("all 7 criteria passed\n");
    return g_failed == 0 ? 0 : 1;
}
