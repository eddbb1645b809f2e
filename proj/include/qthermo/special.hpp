#pragma once

#include "qthermo/quadrature.hpp"

namespace qthermo {

// Orders are capped where the series oracle is validated.
inline constexpr int kMaxBesselOrder = 20;
inline constexpr double kSeriesBetaMax = 30.0;
inline constexpr double kBetaMax = 700.0;  // exp(|beta|) still representable

double factorial(int n);          // n <= 170
double gamma_half_integer(int n); // Gamma(n + 1/2), n <= 20, exact odd-factorial route

// I_n(beta) from the Poisson-type integral
//   (beta/2)^n / (sqrt(pi) Gamma(n+1/2)) * integral_{-1}^{1} e^{-beta z} (1-z^2)^{n-1/2} dz
// evaluated through the Gegenbauer substitution.
double bessel_i_poisson(int n, double beta, const QuadratureSpec& spec = QuadratureSpec{});

// Power series sum_k (beta/2)^(n+2k) / (k! (n+k)!), |beta| <= 30.
// All terms share a sign, so there is no cancellation; truncation at
// relative term 1e-17 with a 200-term cap.
double bessel_i_series(int n, double beta);

// Reduced function Ihat_n(beta) = I_n(beta) / (beta/2)^n
//                               = sum_k (beta^2/4)^k / (k! (n+k)!).
// Entire, even, strictly positive; Ihat_n(0) = 1/n!. This is what every
// downstream consumer uses: it removes the 0/0 at beta = 0 that plagues the
// raw normalization. Series for |beta| <= 30, Poisson ratio beyond.
double bessel_i_reduced(int n, double beta, const QuadratureSpec& spec = QuadratureSpec{});

}  // namespace qthermo
