#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "newton/errors.hpp"
#include "newton/monotonicity.hpp"
#include "newton/oracle.hpp"

using namespace newton;

namespace {

SupportSet sup3(std::vector<LatticePoint> pts) { return make_support(3, std::move(pts)); }

SupportSet fermat(long long a, long long b, long long c) {
    return sup3({LatticePoint(a, 0, 0), LatticePoint(0, b, 0), LatticePoint(0, 0, c)});
}

const SupportSet kPaper = sup3({LatticePoint(6, 0, 0), LatticePoint(0, 6, 0), LatticePoint(2, 0, 1),
                                LatticePoint(0, 2, 1), LatticePoint(0, 0, 4)});

}  // namespace

TEST_CASE("add_point keeps or absorbs old vertices") {
    SupportSet a = add_point(fermat(3, 3, 3), LatticePoint(1, 1, 0));
    CHECK(a.points == std::vector<LatticePoint>{LatticePoint(0, 0, 3), LatticePoint(0, 3, 0),
                                                LatticePoint(1, 1, 0), LatticePoint(3, 0, 0)});

    SupportSet b = add_point(fermat(2, 2, 1), LatticePoint(1, 0, 0));
    CHECK(b.points == std::vector<LatticePoint>{LatticePoint(0, 0, 1), LatticePoint(0, 2, 0),
                                                LatticePoint(1, 0, 0)});

    SupportSet c = add_point(fermat(2, 2, 2), LatticePoint(0, 0, 0));
    CHECK(c.points == std::vector<LatticePoint>{LatticePoint(0, 0, 0)});
}

TEST_CASE("add_point error taxonomy") {
    CHECK_THROWS_AS(add_point(fermat(2, 2, 2), LatticePoint(1, 1, 0)), PointInPolyhedronError);
    CHECK_THROWS_AS(add_point(fermat(2, 2, 2), LatticePoint(3, 3, 3)), PointInPolyhedronError);
    CHECK_THROWS_AS(add_point(fermat(2, 2, 2), LatticePoint(-1, 0, 0)), NotLatticeError);
}

TEST_CASE("difference_skeleton on a flat tetrahedron") {
    NewtonPolyhedron poly = build_polyhedron(fermat(2, 2, 1));
    DifferenceSkeleton sk = difference_skeleton(poly, LatticePoint(1, 0, 0));
    REQUIRE(sk.visible_facets.size() == 1);
    const Halfspace& h = poly.compact_facets[std::size_t(sk.visible_facets[0])].plane;
    CHECK(h.normal == Vec3{Int(1), Int(1), Int(2)});
    CHECK(h.offset == 2);
    CHECK(sk.vertex_set == std::vector<LatticePoint>{LatticePoint(0, 0, 1), LatticePoint(0, 2, 0),
                                                     LatticePoint(1, 0, 0), LatticePoint(2, 0, 0)});
    // P lies on z=0 and y=0; planes are reported in axis order z, y, x.
    REQUIRE(sk.planes.size() == 2);
    CHECK(sk.planes[0].axis == 2);
    CHECK(sk.planes[0].off_plane == std::vector<LatticePoint>{LatticePoint(0, 0, 1)});
    CHECK(sk.planes[1].axis == 1);
    CHECK(sk.planes[1].off_plane == std::vector<LatticePoint>{LatticePoint(0, 2, 0)});
}

TEST_CASE("difference_skeleton on the symmetric cubic") {
    DifferenceSkeleton sk =
        difference_skeleton(build_polyhedron(fermat(3, 3, 3)), LatticePoint(1, 1, 0));
    REQUIRE(sk.planes.size() == 1);
    CHECK(sk.planes[0].axis == 2);
    CHECK(sk.planes[0].off_plane == std::vector<LatticePoint>{LatticePoint(0, 0, 3)});
}

TEST_CASE("difference_skeleton counts two apexes in the regression example") {
    DifferenceSkeleton sk = difference_skeleton(build_polyhedron(kPaper), LatticePoint(3, 2, 0));
    REQUIRE(sk.planes.size() == 1);
    CHECK(sk.planes[0].axis == 2);
    CHECK(sk.planes[0].off_plane.size() == 2);
}

TEST_CASE("is_unit_pyramid examples") {
    auto r1 = is_unit_pyramid(build_polyhedron(fermat(2, 2, 1)), LatticePoint(1, 0, 0));
    REQUIRE(r1.has_value());
    CHECK(r1->plane_axis == 2);
    CHECK(r1->apex == LatticePoint(0, 0, 1));

    CHECK_FALSE(is_unit_pyramid(build_polyhedron(fermat(3, 3, 3)), LatticePoint(1, 1, 0)));

    // Two planes qualify; the first in z, y, x order wins.
    auto r3 = is_unit_pyramid(build_polyhedron(fermat(1, 1, 2)), LatticePoint(0, 0, 1));
    REQUIRE(r3.has_value());
    CHECK(r3->plane_axis == 1);
    CHECK(r3->apex == LatticePoint(0, 1, 0));

    CHECK_FALSE(is_unit_pyramid(build_polyhedron(kPaper), LatticePoint(3, 2, 0)));
}

TEST_CASE("classify matches the three spec cases") {
    // (1,1,1) lies on the facet x+y+z=3 of the symmetric cubic, so a strictly
    // larger simplex is needed to put it under the polyhedron.
    Classification interior = classify(build_polyhedron(fermat(4, 4, 4)), LatticePoint(1, 1, 1));
    CHECK_FALSE(interior.equal);
    CHECK(interior.interior_point);
    CHECK(interior.reasons.empty());

    Classification tall = classify(build_polyhedron(fermat(3, 3, 3)), LatticePoint(1, 1, 0));
    CHECK_FALSE(tall.equal);
    CHECK_FALSE(tall.interior_point);
    REQUIRE(tall.reasons.size() == 1);
    CHECK(tall.reasons[0].axis == 2);
    CHECK_FALSE(tall.reasons[0].multi_apex);
    CHECK(tall.reasons[0].height == 3);

    Classification multi = classify(build_polyhedron(kPaper), LatticePoint(3, 2, 0));
    CHECK_FALSE(multi.equal);
    REQUIRE(multi.reasons.size() == 1);
    CHECK(multi.reasons[0].axis == 2);
    CHECK(multi.reasons[0].multi_apex);
    CHECK(multi.reasons[0].off_count == 2);
}

TEST_CASE("classify equal carries a height-1 witness") {
    Classification eq = classify(build_polyhedron(fermat(2, 2, 1)), LatticePoint(1, 0, 0));
    CHECK(eq.equal);
    REQUIRE(eq.witness.has_value());
    CHECK(eq.witness->plane_axis == 2);
    CHECK(eq.witness->apex == LatticePoint(0, 0, 1));
    CHECK(eq.witness->apex[eq.witness->plane_axis] == 1);
}

TEST_CASE("apex location for P on an axis and P at the origin") {
    // P on the z-axis: the apex must lie in a coordinate plane containing that axis.
    Classification axis = classify(build_polyhedron(fermat(1, 1, 2)), LatticePoint(0, 0, 1));
    REQUIRE(axis.equal);
    CHECK((axis.witness->apex[0] == 0 || axis.witness->apex[1] == 0));
    CHECK(axis.witness->apex == LatticePoint(0, 1, 0));

    // P = 0: the apex must be a unit axis vector.
    Classification origin = classify(build_polyhedron(fermat(1, 1, 1)), LatticePoint(0, 0, 0));
    REQUIRE(origin.equal);
    const LatticePoint& q = origin.witness->apex;
    CHECK((q == LatticePoint(1, 0, 0) || q == LatticePoint(0, 1, 0) || q == LatticePoint(0, 0, 1)));
    CHECK(newton_number(add_point(fermat(1, 1, 1), LatticePoint(0, 0, 0))) ==
          newton_number(fermat(1, 1, 1)));
}

TEST_CASE("nu_drop telescopes") {
    NuDropResult r1 = nu_drop(fermat(3, 3, 3), {LatticePoint(1, 1, 0)});
    CHECK(r1.total == 6);
    CHECK(r1.steps == std::vector<Int>{Int(6)});

    NuDropResult r2 = nu_drop(kPaper, {LatticePoint(3, 2, 0)});
    CHECK(r2.total == 2);
    CHECK(r2.steps == std::vector<Int>{Int(2)});

    NuDropResult r3 = nu_drop(kPaper, {});
    CHECK(r3.total == 0);
    CHECK(r3.steps.empty());

    // A repeated point is inside on its second turn: skipped with step 0.
    NuDropResult r4 = nu_drop(kPaper, {LatticePoint(3, 2, 0), LatticePoint(3, 2, 0)});
    CHECK(r4.total == 2);
    CHECK(r4.steps == std::vector<Int>{Int(2), Int(0)});
    CHECK(r4.skipped == std::vector<bool>{false, true});
}

TEST_CASE("nu_drop random chains telescope exactly") {
    GeneratorConfig cfg;
    cfg.max_intercept = 8;
    cfg.extra_points = 3;
    for (std::uint64_t seed = 700; seed < 715; ++seed) {
        cfg.seed = seed;
        SupportSet A = random_convenient_support(cfg);
        Xorshift64Star rng(seed * 31 + 7);
        std::vector<LatticePoint> chain;
        NewtonPolyhedron poly = build_polyhedron(A);
        for (int t = 0; t < 4; ++t) {
            LatticePoint p(Int(rng.below(8)), Int(rng.below(8)), Int(rng.below(8)));
            chain.push_back(p);
        }
        NuDropResult r = nu_drop(A, chain);
        Int sum(0);
        for (const Int& s : r.steps) {
            CHECK(s >= 0);
            sum += s;
        }
        CHECK(sum == r.total);
        CHECK(r.total == newton_number(A) - newton_number(r.final_support));
        // Set monotonicity: A' = A plus extra points never raises nu.
        CHECK(newton_number(r.final_support) <= newton_number(A));
    }
}

TEST_CASE("enumerate_equal frozen lists") {
    // Frozen regression: full list for the flat tetrahedron.
    std::vector<EqualWitness> ws = enumerate_equal(fermat(2, 2, 1));
    REQUIRE(ws.size() == 3);
    CHECK(ws[0].point == LatticePoint(0, 0, 0));
    CHECK(ws[1].point == LatticePoint(0, 1, 0));
    CHECK(ws[2].point == LatticePoint(1, 0, 0));
    for (const EqualWitness& w : ws) {
        CHECK(w.plane_axis == 2);
        CHECK(w.apex == LatticePoint(0, 0, 1));
    }

    std::vector<EqualWitness> unit = enumerate_equal(fermat(1, 1, 1));
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].point == LatticePoint(0, 0, 0));

    std::vector<EqualWitness> paper = enumerate_equal(kPaper);
    for (const EqualWitness& w : paper) CHECK(w.point != LatticePoint(3, 2, 0));
}

TEST_CASE("nu_zero_witness") {
    NuZeroWitness empty = nu_zero_witness(sup3({LatticePoint(0, 0, 0)}));
    CHECK(empty.kind == NuZeroKind::Empty);

    NuZeroWitness axis = nu_zero_witness(fermat(2, 2, 1));
    CHECK(axis.kind == NuZeroKind::AxisIntercept);
    CHECK(axis.axis == 2);

    NuZeroWitness pos = nu_zero_witness(fermat(2, 2, 2));
    CHECK(pos.kind == NuZeroKind::Positive);
    CHECK(newton_number(fermat(2, 2, 2)) == 1);

    GeneratorConfig cfg;
    cfg.max_intercept = 6;
    cfg.extra_points = 3;
    for (std::uint64_t seed = 900; seed < 930; ++seed) {
        cfg.seed = seed;
        SupportSet A = random_convenient_support(cfg);
        CHECK((nu_zero_witness(A).kind != NuZeroKind::Positive) == (newton_number(A) == 0));
    }
}
