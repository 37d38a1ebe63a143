#pragma once

#include <optional>
#include <vector>

#include "newton/core.hpp"

namespace newton {

/// Support of conv(polyhedron ∪ {p}), minimality restored.
/// Throws PointInPolyhedronError if p already lies inside, NotLatticeError if
/// p has a negative coordinate.
SupportSet add_point(const SupportSet& support, const LatticePoint& p);

/// Vertex skeleton of the polyhedral difference conv(Γ ∪ {P}) − Γ.
///
/// Lemma: every vertex of the difference is P or a vertex of a facet visible
/// from P. Proof sketch: the difference is the union of the pyramids
/// cone(F, P) over visible compact facets F, and each pyramid's vertices are
/// P plus the vertices of F; a union of polytopes has its vertices among the
/// vertices of the pieces.
struct DifferenceSkeleton {
    std::vector<int> visible_facets;       // indices into host compact_facets
    std::vector<LatticePoint> vertex_set;  // {P} ∪ visible facet vertices, sorted

    struct PlaneData {
        int axis;                            // coordinate plane {x_axis = 0}
        std::vector<LatticePoint> off_plane; // vertices with positive axis coordinate
    };
    std::vector<PlaneData> planes;  // planes containing P, axis order z, y, x
};

DifferenceSkeleton difference_skeleton(const NewtonPolyhedron& poly, const LatticePoint& p);

struct UnitPyramid {
    int plane_axis;     // base plane {x_axis = 0}
    LatticePoint apex;  // single off-plane vertex, at height exactly 1
};

/// The pyramid criterion: the difference is a pyramid with base in a
/// coordinate plane through P and height 1. Checks planes in the order
/// z=0, y=0, x=0 and reports the first hit.
std::optional<UnitPyramid> is_unit_pyramid(const NewtonPolyhedron& poly, const LatticePoint& p);

struct PlaneReason {
    int axis;
    bool multi_apex;  // otherwise a single apex at height >= 2
    Int height;       // single-apex height (when !multi_apex)
    int off_count;    // number of off-plane vertices
};

struct Classification {
    bool equal = false;
    std::optional<UnitPyramid> witness;  // set when equal
    bool interior_point = false;         // strict: P lies on no coordinate plane
    std::vector<PlaneReason> reasons;    // strict: one entry per plane containing P
};

Classification classify(const NewtonPolyhedron& poly, const LatticePoint& p);

struct NuDropResult {
    Int total;
    std::vector<Int> steps;
    std::vector<bool> skipped;  // point was already inside at its turn
    SupportSet final_support;
};

NuDropResult nu_drop(const SupportSet& support, const std::vector<LatticePoint>& points);

struct EqualWitness {
    LatticePoint point;
    int plane_axis;
    LatticePoint apex;
};

/// All lattice points in the intercept box that preserve the Newton number,
/// lexicographic order, each re-verified numerically.
std::vector<EqualWitness> enumerate_equal(const SupportSet& support);

enum class NuZeroKind { Empty, AxisIntercept, Positive };

struct NuZeroWitness {
    NuZeroKind kind;
    int axis = -1;  // set for AxisIntercept
};

/// Witness of the corollary: nu = 0 iff the region is empty or some axis
/// intercept equals 1.
NuZeroWitness nu_zero_witness(const SupportSet& support);

}  // namespace newton
