#include "qthermo/special.hpp"

#include <cmath>
#include <numbers>

namespace qthermo {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxBesselOrder)
        throw Error(errc::domain_exceeded, "Bessel order outside validated range [0, 20]");
}

constexpr double kTermRelTol = 1e-17;
constexpr int kTermCap = 200;

}  // namespace

double factorial(int n) {
    if (n < 0 || n > 170) throw Error(errc::domain_exceeded, "factorial argument out of range");
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double gamma_half_integer(int n) {
    check_order(n);
    // Gamma(n + 1/2) = (2n-1)!! * sqrt(pi) / 2^n; (2n-1)!! fits __int128 for n <= 20
    unsigned __int128 odd = 1;
    for (int k = 1; k <= n; ++k) odd *= static_cast<unsigned>(2 * k - 1);
    return static_cast<double>(odd) * std::sqrt(std::numbers::pi) / std::ldexp(1.0, n);
}

double bessel_i_series(int n, double beta) {
    check_order(n);
    if (std::abs(beta) > kSeriesBetaMax)
        throw Error(errc::domain_exceeded, "series path limited to |beta| <= 30");
    const double h = 0.5 * beta;
    double term = 1.0 / factorial(n);
    for (int k = 0; k < n; ++k) term *= h;  // (beta/2)^n / n!
    double sum = term;
    const double h2 = h * h;
    for (int k = 0; k < kTermCap; ++k) {
        term *= h2 / ((k + 1.0) * (n + k + 1.0));
        sum += term;
        if (std::abs(term) < kTermRelTol * std::abs(sum)) break;
    }
    return sum;
}

double bessel_i_poisson(int n, double beta, const QuadratureSpec& spec) {
    check_order(n);
    if (std::abs(beta) > kBetaMax) throw Error(errc::overflow, "exp(|beta|) would overflow");
    const double integral =
        integrate_gegenbauer([beta](double z) { return std::exp(-beta * z); }, n, spec);
    double pref = 1.0 / (std::sqrt(std::numbers::pi) * gamma_half_integer(n));
    const double h = 0.5 * beta;
    for (int k = 0; k < n; ++k) pref *= h;
    return pref * integral;
}

double bessel_i_reduced(int n, double beta, const QuadratureSpec& spec) {
    check_order(n);
    if (std::abs(beta) > kBetaMax) throw Error(errc::overflow, "exp(|beta|) would overflow");
    if (std::abs(beta) <= kSeriesBetaMax) {
        const double q = 0.25 * beta * beta;
        double term = 1.0 / factorial(n);
        double sum = term;
        for (int k = 0; k < kTermCap; ++k) {
            term *= q / ((k + 1.0) * (n + k + 1.0));
            sum += term;
            if (term < kTermRelTol * sum) break;
        }
        return sum;
    }
    double scale = 1.0;
    const double h = 0.5 * beta;
    for (int k = 0; k < n; ++k) scale *= h;
    return bessel_i_poisson(n, beta, spec) / scale;
}

}  // namespace qthermo
