#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "newton/core.hpp"

namespace newton {

/// xorshift64* with the standard constants: shifts 12, 25, 27 and multiplier
/// 0x2545F4914F6CDD1D. Fully specified so fixtures reproduce across languages;
/// uniform_below uses plain modulo reduction.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

struct GeneratorConfig {
    std::uint64_t seed = 1;
    int max_intercept = 8;  // M >= 1
    int extra_points = 0;   // k >= 0
    int dim = 3;
};

/// Deterministic in the seed: axis intercepts uniform in [1, M], then k extra
/// box points, discarding points inside the hull-so-far or absorbing an
/// existing point. Convenient and minimal by construction.
SupportSet random_convenient_support(const GeneratorConfig& config);

/// V_3 by slab integration: Simpson per slab between vertex heights, exact for
/// the piecewise-quadratic cross-section area. Independent of the
/// vertex-fan volume path.
Rat volume_slab(const GammaMinusRegion& region);

/// 2D region area by trapezoid-exact integration of linear slice lengths.
Rat area_slab(const GammaMinusRegion::PlaneRestriction& pr, const Int& m_a, const Int& m_b);

/// Newton number recomputed through the slab volume paths.
Int nu_oracle(const SupportSet& support);

struct CrossCheckReport {
    std::uint64_t base_seed = 0;
    int iterations = 0;
    long supports_checked = 0;
    long points_checked = 0;
    long equal_cases = 0;
    long strict_cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Per iteration: generate a support, compare newton_number against the
/// oracle, then stress the theorem (monotonicity, pyramid criterion,
/// strict-drop tags, nonnegativity, zero witness) on a random point under the
/// polyhedron. Counterexamples are recorded, not thrown.
CrossCheckReport cross_check(const GeneratorConfig& config, int iterations);

}  // namespace newton
