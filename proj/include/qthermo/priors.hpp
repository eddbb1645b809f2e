#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qthermo/bloch.hpp"
#include "qthermo/quadrature.hpp"

namespace qthermo {

// n = 1: complex family on the 3-ball; n = 2: quaternionic family on the
// 5-ball. d = 2n + 1 throughout.
struct StructureFamily {
    int n = 1;

    static StructureFamily complex_family() { return {1}; }
    static StructureFamily quaternionic_family() { return {2}; }
    static StructureFamily of(int n) {
        if (n != 1 && n != 2) throw Error(errc::bad_config, "family index must be 1 or 2");
        return {n};
    }

    int ball_dim() const noexcept { return 2 * n + 1; }
};

// Surface area of the unit sphere S^(d-1) in R^d.
double sphere_surface_area(int d);

// C_n = Gamma(n+1) / (sqrt(pi) Gamma(n+1/2)): 2/pi for n=1, 8/(3 pi) for n=2.
double structure_constant(int n);

// Normalized prior density on the open unit ball:
//   n=1: 1 / (pi^2 sqrt(1-r^2)),  n=2: 2 / (pi^3 sqrt(1-r^2)).
double prior_pdf(StructureFamily fam, const BlochPoint& p);

// Radially reduced total mass of prior_pdf over the ball; must come out 1.
double prior_normalization_check(StructureFamily fam, const QuadratureSpec& spec = QuadratureSpec{});

// Ball integral of the unnormalized density 1/sqrt(1-r^2): pi^2 (n=1),
// pi^3/2 (n=2).
double prior_unnormalized_mass(StructureFamily fam, const QuadratureSpec& spec = QuadratureSpec{});

// Univariate marginal in the last coordinate: C_n (1-z^2)^(n-1/2).
double structure_function(StructureFamily fam, double z);

// Closed-form CDF of structure_function (arcsine-type antiderivatives).
double structure_cdf(StructureFamily fam, double z);

// Integrating the prior over the last coordinate at fixed remaining
// coordinates must give a constant: 1/pi on the unit disk (n=1), 2/pi^2 on
// the unit 4-ball (n=2) -- the reciprocal volumes.
struct MarginalEvaluation {
    double sub_radius = 0.0;  // norm of the fixed (d-1)-coordinate block
    double marginal = 0.0;
    double abs_deviation = 0.0;
};
struct MarginalReport {
    int n = 0;
    double expected_constant = 0.0;
    std::vector<MarginalEvaluation> evaluations;
    double max_abs_deviation = 0.0;
};
MarginalReport marginal_check(StructureFamily fam, const QuadratureSpec& spec = QuadratureSpec{});

struct SampleBatch {
    int dim = 3;
    std::uint64_t seed = 0;
    std::vector<BlochPoint> points;
};

// Direction: normalized Gaussian d-vector. Radius: r = sin(theta) with
// theta drawn from density proportional to sin^(d-1) on [0, pi/2] by
// rejection against the uniform proposal. Bit-reproducible per seed
// (SplitMix64 + Box-Muller).
SampleBatch sample_prior(StructureFamily fam, int count, std::uint64_t seed);

// CSV: header row, index column then the d coordinates, LF endings,
// shortest round-trip formatting.
void write_samples_csv(const SampleBatch& batch, std::ostream& os);

}  // namespace qthermo
