#pragma once

#include <functional>

#include "qthermo/error.hpp"

namespace qthermo {

// Tolerance / refinement policy shared by every definite integral in the
// library. Defaults are tight: after the sin-substitution all integrands
// here are analytic and panels converge almost immediately.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;
    int base_rule_order = 20;  // Gauss-Legendre points per panel

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1 || base_rule_order < 10)
            throw Error(errc::bad_config, "invalid QuadratureSpec");
    }
};

struct IntegralResult {
    double value = 0.0;
    double err_est = 0.0;
};

using Integrand = std::function<double(double)>;

// Single fixed-order Gauss-Legendre panel (no refinement); exact for
// polynomials of degree <= 2*order - 1. Supported orders: 10, 16, 20, 32.
double gauss_legendre_panel(const Integrand& f, double a, double b, int order = 20);

// Adaptive bisection on Gauss-Legendre panels. Panel error is estimated by
// comparing the parent panel against its two halves; an interval is accepted
// once its estimate fits the share of the global budget proportional to its
// width. Throws tolerance_not_reached when max_subdivisions is exhausted.
IntegralResult integrate(const Integrand& f, double a, double b,
                         const QuadratureSpec& spec = QuadratureSpec{});

// integral over [-1, 1] of g(z) * (1 - z^2)^(n - 1/2) dz, computed as
// integral over [-pi/2, pi/2] of g(sin t) * cos^(2n) t dt. The substitution
// removes the endpoint derivative blow-up that makes direct z-integration
// unreliable.
double integrate_gegenbauer(const Integrand& g, int n,
                            const QuadratureSpec& spec = QuadratureSpec{});

}  // namespace qthermo
