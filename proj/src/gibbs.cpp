#include "qthermo/gibbs.hpp"

#include <cmath>
#include <numbers>

#include "qthermo/special.hpp"

namespace qthermo {

namespace {

constexpr double kPi = std::numbers::pi;

// 1 / (Ihat_n(beta) sqrt(pi) Gamma(n+1/2)) -- the density prefactor
double density_scale(const GibbsParams& gp) {
    return 1.0 / (bessel_i_reduced(gp.n, gp.beta) * std::sqrt(kPi) * gamma_half_integer(gp.n));
}

double weight_pow(int n, double w) {
    // (1-z^2)^(n-1/2) for w = 1-z^2 >= 0
    double out = std::sqrt(w);
    for (int k = 1; k < n; ++k) out *= w;
    return out;
}

}  // namespace

const char* to_string(ThermoQuantity q) {
    switch (q) {
        case ThermoQuantity::mean: return "mean";
        case ThermoQuantity::variance: return "variance";
        case ThermoQuantity::relative_entropy: return "relative_entropy";
        case ThermoQuantity::fisher: return "fisher";
        case ThermoQuantity::jeffreys: return "jeffreys";
    }
    return "?";
}

ThermoQuantity thermo_quantity_from_string(const std::string& name) {
    if (name == "mean") return ThermoQuantity::mean;
    if (name == "variance" || name == "var") return ThermoQuantity::variance;
    if (name == "relative_entropy" || name == "entropy") return ThermoQuantity::relative_entropy;
    if (name == "fisher") return ThermoQuantity::fisher;
    if (name == "jeffreys") return ThermoQuantity::jeffreys;
    throw Error(errc::bad_config, "unknown quantity: " + name);
}

double gibbs_pdf(const GibbsParams& gp, double z) {
    gp.validate();
    if (std::abs(z) > 1.0) throw Error(errc::domain_exceeded, "gibbs_pdf needs |z| <= 1");
    const double w = 1.0 - z * z;
    if (w <= 0.0) return 0.0;
    return std::exp(-gp.beta * z) * weight_pow(gp.n, w) * density_scale(gp);
}

double partition_reduced(const GibbsParams& gp) {
    gp.validate();
    return std::sqrt(kPi) * gamma_half_integer(gp.n) * bessel_i_reduced(gp.n, gp.beta);
}

double mean_z(const GibbsParams& gp) {
    gp.validate();
    return -(0.5 * gp.beta) * bessel_i_reduced(gp.n + 1, gp.beta) / bessel_i_reduced(gp.n, gp.beta);
}

double mean_z_quadrature(const GibbsParams& gp, const QuadratureSpec& spec) {
    gp.validate();
    const double scale = density_scale(gp);
    return integrate_gegenbauer(
        [&](double z) { return z * std::exp(-gp.beta * z) * scale; }, gp.n, spec);
}

double variance_z(const GibbsParams& gp, const QuadratureSpec& spec) {
    gp.validate();
    const double scale = density_scale(gp);
    const double second_moment = integrate_gegenbauer(
        [&](double z) { return z * z * std::exp(-gp.beta * z) * scale; }, gp.n, spec);
    const double mean = mean_z(gp);
    return second_moment - mean * mean;
}

double relative_entropy(const GibbsParams& gp, const QuadratureSpec& spec) {
    gp.validate();
    const double scale = density_scale(gp);
    const double log2scale = std::log(2.0 * scale);
    const int n = gp.n;
    const double beta = gp.beta;
    // p log(2p) in the theta variable; log|cos| keeps the endpoint factor
    // finite at every quadrature node (p -> 0 there, integrand -> 0)
    const auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        const double c = std::cos(theta);
        const double c2 = c * c;
        double wgt = 1.0;
        for (int k = 0; k < n; ++k) wgt *= c2;
        const double p_part = scale * std::exp(-beta * s) * wgt;
        const double logp = log2scale - beta * s + (2.0 * n - 1.0) * std::log(c);
        return p_part * logp;
    };
    return integrate(integrand, -0.5 * kPi, 0.5 * kPi, spec).value;
}

double fisher_beta(const GibbsParams& gp) {
    gp.validate();
    if (std::abs(gp.beta) > 100.0)
        throw Error(errc::domain_exceeded, "fisher_beta supports |beta| <= 100");
    const double i0 = bessel_i_reduced(gp.n, gp.beta);
    const double i1 = bessel_i_reduced(gp.n + 1, gp.beta);
    const double i2 = bessel_i_reduced(gp.n + 2, gp.beta);
    const double ratio1 = i1 / i0;
    const double half_beta = 0.5 * gp.beta;
    return 0.5 * ratio1 + half_beta * half_beta * (i2 / i0 - ratio1 * ratio1);
}

double fisher_beta_fd(const GibbsParams& gp, double step) {
    gp.validate();
    // second difference of log Z through the first derivative -<z>
    const auto dlogz = [&](double b) { return -mean_z({gp.n, b}); };
    return (dlogz(gp.beta + step) - dlogz(gp.beta - step)) / (2.0 * step);
}

double jeffreys_beta(const GibbsParams& gp) {
    return std::sqrt(fisher_beta(gp));
}

std::vector<double> make_grid(double beta_min, double beta_max, double step) {
    if (!(step > 0.0)) throw Error(errc::bad_config, "grid step must be > 0");
    if (!(beta_max >= beta_min)) throw Error(errc::bad_config, "grid range is empty");
    const long long intervals = std::llround((beta_max - beta_min) / step);
    if (intervals < 0 || std::abs(beta_min + static_cast<double>(intervals) * step - beta_max) >
                             1e-9 * std::max(1.0, std::abs(beta_max - beta_min)))
        throw Error(errc::bad_config, "grid step does not divide the range");
    const long long count = intervals + 1;
    std::vector<double> grid(static_cast<std::size_t>(count));
    if (count == 1) {
        grid[0] = beta_min;
        return grid;
    }
    // endpoint interpolation: symmetric ranges negate exactly under reversal
    const double denom = static_cast<double>(count - 1);
    for (long long i = 0; i < count; ++i)
        grid[static_cast<std::size_t>(i)] =
            (beta_min * static_cast<double>(count - 1 - i) + beta_max * static_cast<double>(i)) / denom;
    return grid;
}

ThermoCurve sweep(ThermoQuantity quantity, int n, const std::vector<double>& beta_grid,
                  const QuadratureSpec& spec) {
    for (std::size_t i = 1; i < beta_grid.size(); ++i)
        if (!(beta_grid[i] > beta_grid[i - 1]))
            throw Error(errc::bad_config, "beta grid must be strictly increasing");
    for (double b : beta_grid)
        if (std::abs(b) > 100.0) throw Error(errc::domain_exceeded, "sweep supports |beta| <= 100");

    ThermoCurve curve;
    curve.quantity = quantity;
    curve.n = n;
    curve.beta_grid = beta_grid;
    curve.values.reserve(beta_grid.size());
    for (double b : beta_grid) {
        const GibbsParams gp{n, b};
        double v = 0.0;
        switch (quantity) {
            case ThermoQuantity::mean: v = mean_z(gp); break;
            case ThermoQuantity::variance: v = variance_z(gp, spec); break;
            case ThermoQuantity::relative_entropy: v = relative_entropy(gp, spec); break;
            case ThermoQuantity::fisher: v = fisher_beta(gp); break;
            case ThermoQuantity::jeffreys: v = jeffreys_beta(gp); break;
        }
        if (!std::isfinite(v))
            throw Error(errc::tolerance_not_reached, "non-finite value in sweep");
        curve.values.push_back(v);
    }
    return curve;
}

}  // namespace qthermo
