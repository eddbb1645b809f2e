#include "qthermo/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

namespace qthermo {

namespace {

struct Rule {
    std::vector<double> x;  // nodes on [-1, 1], ascending
    std::vector<double> w;
};

// Legendre nodes by Newton iteration on the three-term recurrence.
Rule make_rule(int n) {
    Rule r;
    r.x.resize(static_cast<std::size_t>(n));
    r.w.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        double x = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing pass, then stop
                double q0 = 1.0, q1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double q2 = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
                    q0 = q1;
                    q1 = q2;
                }
                dp = n * (x * q1 - q0) / (x * x - 1.0);
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[static_cast<std::size_t>(i - 1)] = -x;  // ascending order
        r.w[static_cast<std::size_t>(i - 1)] = w;
        r.x[static_cast<std::size_t>(n - i)] = x;
        r.w[static_cast<std::size_t>(n - i)] = w;
    }
    return r;
}

const Rule& rule_for(int order) {
    if (order < 10 || order > 64) throw Error(errc::bad_config, "Gauss-Legendre order must be in [10, 64]");
    static Rule cache[65];
    static std::once_flag built[65];
    std::call_once(built[order], [order] { cache[order] = make_rule(order); });
    return cache[order];
}

double panel(const Integrand& f, double a, double b, const Rule& r) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

}  // namespace

double gauss_legendre_panel(const Integrand& f, double a, double b, int order) {
    return panel(f, a, b, rule_for(order));
}

IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (a == b) return {0.0, 0.0};
    if (a > b) throw Error(errc::bad_config, "integrate requires a <= b");

    const Rule& r = rule_for(spec.base_rule_order);
    const double total_len = b - a;

    struct Interval {
        double lo, hi, estimate;
    };
    std::vector<Interval> work;
    work.push_back({a, b, panel(f, a, b, r)});
    const double rough = std::abs(work.front().estimate);
    const double budget = std::max(spec.abs_tol, spec.rel_tol * rough);

    double value = 0.0;
    double err = 0.0;
    int subdivisions = 0;
    while (!work.empty()) {
        const Interval iv = work.back();
        work.pop_back();
        const double mid = 0.5 * (iv.lo + iv.hi);
        const double left = panel(f, iv.lo, mid, r);
        const double right = panel(f, mid, iv.hi, r);
        const double refined = left + right;
        const double e = std::abs(iv.estimate - refined);
        const double share = budget * (iv.hi - iv.lo) / total_len;
        if (e <= share) {
            value += refined;
            err += e;
            continue;
        }
        if (++subdivisions > spec.max_subdivisions)
            throw Error(errc::tolerance_not_reached,
                        "adaptive quadrature exhausted max_subdivisions");
        work.push_back({iv.lo, mid, left});
        work.push_back({mid, iv.hi, right});
    }
    return {value, err};
}

double integrate_gegenbauer(const Integrand& g, int n, const QuadratureSpec& spec) {
    if (n < 0 || n > 20) throw Error(errc::domain_exceeded, "Gegenbauer weight index out of range");
    const double half_pi = 0.5 * std::numbers::pi;
    const auto integrand = [&](double t) {
        const double c = std::cos(t);
        const double c2 = c * c;
        double wgt = 1.0;
        for (int k = 0; k < n; ++k) wgt *= c2;
        return g(std::sin(t)) * wgt;
    };
    return integrate(integrand, -half_pi, half_pi, spec).value;
}

}  // namespace qthermo
