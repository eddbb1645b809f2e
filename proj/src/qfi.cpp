#include "qthermo/qfi.hpp"

#include <algorithm>
#include <cmath>

#include "qthermo/state_space.hpp"

namespace qthermo {

QFIMatrix qfi_closed_form(const BlochPoint& p) {
    p.require_interior();
    const int d = p.dim();
    const double r2 = p.radius_squared();
    const double pref = 1.0 / (1.0 - r2);
    QFIMatrix h(p);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const double entry = (a == b) ? 1.0 - (r2 - p[a] * p[a]) : p[a] * p[b];
            h(a, b) = pref * entry;
        }
    }
    return h;
}

double qfi_determinant(const BlochPoint& p) {
    p.require_interior();
    return 1.0 / (1.0 - p.radius_squared());
}

HermitianMatrix sld_solve(const HermitianMatrix& rho, const HermitianMatrix& drho) {
    const int n = rho.dim();
    const Eigensystem es = eigh(rho);
    const ComplexMatrix vdag = es.vectors.adjoint();
    const ComplexMatrix dt = vdag * drho.matrix() * es.vectors;

    ComplexMatrix lt(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double denom = es.values[static_cast<std::size_t>(a)] +
                                 es.values[static_cast<std::size_t>(b)];
            if (denom < 1e-12)
                throw Error(errc::singular_state, "eigenvalue pair sum below 1e-12 in SLD solve");
            lt(a, b) = 2.0 * dt(a, b) / denom;
        }
    ComplexMatrix l = es.vectors * lt * vdag;
    // kill round-off asymmetry so the result is exactly Hermitian
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            const cplx v = 0.5 * (l(r, c) + std::conj(l(c, r)));
            l(r, c) = v;
            l(c, r) = std::conj(v);
        }
    return HermitianMatrix::from_unchecked(l);
}

QFIMatrix qfi_numeric(const BlochPoint& p) {
    p.require_interior();
    const int d = p.dim();
    const int fam = p.family();
    const HermitianMatrix rho = density(p);

    std::array<ComplexMatrix, 5> l{ComplexMatrix(1), ComplexMatrix(1), ComplexMatrix(1),
                                   ComplexMatrix(1), ComplexMatrix(1)};
    for (int a = 0; a < d; ++a)
        l[static_cast<std::size_t>(a)] = sld_solve(rho, density_derivative(fam, a)).matrix();

    QFIMatrix h(p);
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            const ComplexMatrix anti = l[static_cast<std::size_t>(a)] * l[static_cast<std::size_t>(b)] +
                                       l[static_cast<std::size_t>(b)] * l[static_cast<std::size_t>(a)];
            const double val = 0.5 * (rho.matrix() * anti).trace().real();
            h(a, b) = val;
            h(b, a) = val;
        }
    return h;
}

double max_abs_diff(const QFIMatrix& a, const QFIMatrix& b) {
    double worst = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

double determinant_lu(const QFIMatrix& m) {
    const int n = m.dim();
    double a[5][5];
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = m(r, c);

    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        if (a[k][k] == 0.0) return 0.0;
        det *= a[k][k];
        for (int r = k + 1; r < n; ++r) {
            const double f = a[r][k] / a[k][k];
            for (int c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return det;
}

bool is_positive_definite(const QFIMatrix& m) {
    const int n = m.dim();
    double a[5][5];
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = m(r, c);
    for (int k = 0; k < n; ++k) {
        double d = a[k][k];
        for (int j = 0; j < k; ++j) d -= a[k][j] * a[k][j];
        if (!(d > 0.0)) return false;
        a[k][k] = std::sqrt(d);
        for (int r = k + 1; r < n; ++r) {
            double s = a[r][k];
            for (int j = 0; j < k; ++j) s -= a[r][j] * a[k][j];
            a[r][k] = s / a[k][k];
        }
    }
    return true;
}

}  // namespace qthermo
