#include "qthermo/priors.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "qthermo/format.hpp"
#include "qthermo/rng.hpp"
#include "qthermo/special.hpp"

namespace qthermo {

namespace {

constexpr double kPi = std::numbers::pi;

double normalization_constant(int n) {
    // 1/pi^2 for n=1, 2/pi^3 for n=2
    return n == 1 ? 1.0 / (kPi * kPi) : 2.0 / (kPi * kPi * kPi);
}

}  // namespace

double sphere_surface_area(int d) {
    if (d < 2 || d > 5) throw Error(errc::bad_config, "sphere dimension out of range");
    // 2 pi^(d/2) / Gamma(d/2)
    switch (d) {
        case 2: return 2.0 * kPi;
        case 3: return 4.0 * kPi;
        case 4: return 2.0 * kPi * kPi;
        default: return 8.0 * kPi * kPi / 3.0;
    }
}

double structure_constant(int n) {
    return factorial(n) / (std::sqrt(kPi) * gamma_half_integer(n));
}

double prior_pdf(StructureFamily fam, const BlochPoint& p) {
    if (p.dim() != fam.ball_dim())
        throw Error(errc::bad_config, "point dimension does not match family");
    const double r2 = p.radius_squared();
    if (r2 >= 1.0) throw Error(errc::boundary_point, "prior density is singular at the surface");
    return normalization_constant(fam.n) / std::sqrt(1.0 - r2);
}

double prior_unnormalized_mass(StructureFamily fam, const QuadratureSpec& spec) {
    const int d = fam.ball_dim();
    // Surf(S^{d-1}) * int_0^1 r^{d-1} (1-r^2)^{-1/2} dr, r = sin(theta)
    const double radial = integrate(
        [d](double theta) {
            const double s = std::sin(theta);
            double w = 1.0;
            for (int k = 0; k < d - 1; ++k) w *= s;
            return w;
        },
        0.0, 0.5 * kPi, spec).value;
    return sphere_surface_area(d) * radial;
}

double prior_normalization_check(StructureFamily fam, const QuadratureSpec& spec) {
    return normalization_constant(fam.n) * prior_unnormalized_mass(fam, spec);
}

double structure_function(StructureFamily fam, double z) {
    if (std::abs(z) > 1.0) throw Error(errc::domain_exceeded, "structure function needs |z| <= 1");
    const double w = 1.0 - z * z;
    const double base = std::sqrt(w);
    double weight = base;
    for (int k = 1; k < fam.n; ++k) weight *= w;
    return structure_constant(fam.n) * weight;
}

double structure_cdf(StructureFamily fam, double z) {
    if (z <= -1.0) return 0.0;
    if (z >= 1.0) return 1.0;
    const double t = std::asin(z);
    if (fam.n == 1) return 0.5 + (z * std::sqrt(1.0 - z * z) + t) / kPi;
    return 0.5 + t / kPi + 2.0 * std::sin(2.0 * t) / (3.0 * kPi) +
           std::sin(4.0 * t) / (12.0 * kPi);
}

namespace {

// marginal over the last coordinate at a fixed (d-1)-block of norm s:
// int_{-a}^{a} pdf dz with a = sqrt(1-s^2), via z = a sin(theta)
double marginal_over_last(StructureFamily fam, double sub_norm2, const QuadratureSpec& spec) {
    const double a = std::sqrt(1.0 - sub_norm2);
    const double c = normalization_constant(fam.n);
    return integrate(
        [&](double theta) {
            const double z = a * std::sin(theta);
            const double jac = a * std::cos(theta);
            // 1 - s^2 - z^2 = a^2 cos^2(theta); the substitution makes the
            // integrand constant, but evaluate the density honestly
            const double denom2 = 1.0 - sub_norm2 - z * z;
            return c / std::sqrt(denom2) * jac;
        },
        -0.5 * kPi, 0.5 * kPi, spec).value;
}

}  // namespace

MarginalReport marginal_check(StructureFamily fam, const QuadratureSpec& spec) {
    MarginalReport report;
    report.n = fam.n;
    // reciprocal of the area of the unit disk / volume of the unit 4-ball
    report.expected_constant = fam.n == 1 ? 1.0 / kPi : 2.0 / (kPi * kPi);

    static const double kSub3[][2] = {
        {0.0, 0.0}, {0.5, 0.5}, {0.3, -0.4}, {-0.7, 0.1}, {0.6, 0.6},
    };
    static const double kSub5[][4] = {
        {0.0, 0.0, 0.0, 0.0},
        {0.35, 0.35, 0.35, 0.35},  // norm 0.7
        {0.5, 0.0, -0.5, 0.3},
        {-0.2, 0.6, 0.1, -0.4},
        {0.8, 0.1, 0.0, 0.0},
    };

    const int npts = 5;
    for (int i = 0; i < npts; ++i) {
        double norm2 = 0.0;
        if (fam.n == 1)
            norm2 = kSub3[i][0] * kSub3[i][0] + kSub3[i][1] * kSub3[i][1];
        else
            for (int k = 0; k < 4; ++k) norm2 += kSub5[i][k] * kSub5[i][k];

        MarginalEvaluation ev;
        ev.sub_radius = std::sqrt(norm2);
        ev.marginal = marginal_over_last(fam, norm2, spec);
        ev.abs_deviation = std::abs(ev.marginal - report.expected_constant);
        report.max_abs_deviation = std::max(report.max_abs_deviation, ev.abs_deviation);
        report.evaluations.push_back(ev);
    }
    return report;
}

SampleBatch sample_prior(StructureFamily fam, int count, std::uint64_t seed) {
    if (count < 1) throw Error(errc::bad_config, "sample count must be >= 1");
    const int d = fam.ball_dim();

    SampleBatch batch;
    batch.dim = d;
    batch.seed = seed;
    batch.points.reserve(static_cast<std::size_t>(count));

    SplitMix64 rng(seed);
    const double half_pi = 0.5 * kPi;

    for (int i = 0; i < count; ++i) {
        // direction: normalized Gaussian vector
        double g[6];
        double norm2;
        do {
            for (int k = 0; k < d; k += 2) rng.gaussian_pair(g[k], g[k + 1]);
            norm2 = 0.0;
            for (int k = 0; k < d; ++k) norm2 += g[k] * g[k];
        } while (norm2 < 1e-24);
        const double inv = 1.0 / std::sqrt(norm2);

        // radius: theta ~ sin^(d-1) on [0, pi/2] by rejection, r = sin(theta)
        double r;
        for (;;) {
            const double theta = half_pi * rng.uniform01();
            const double s = std::sin(theta);
            double dens = 1.0;
            for (int k = 0; k < d - 1; ++k) dens *= s;
            if (rng.uniform01() <= dens) {
                r = s;
                break;
            }
        }

        double coords[5];
        for (int k = 0; k < d; ++k) coords[k] = r * g[k] * inv;
        batch.points.push_back(BlochPoint::from_coords(coords, d));
    }
    return batch;
}

void write_samples_csv(const SampleBatch& batch, std::ostream& os) {
    os << (batch.dim == 3 ? "index,x,y,z" : "index,u,v,x,y,z") << "\n";
    for (std::size_t i = 0; i < batch.points.size(); ++i) {
        os << i;
        for (int k = 0; k < batch.dim; ++k) os << "," << format_double(batch.points[i][k]);
        os << "\n";
    }
}

}  // namespace qthermo
