#include "qthermo/hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace qthermo {

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = r; c < dim_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            cplx s = 0.0;
            for (int k = 0; k < n; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = s * a(r, c);
    return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return cplx(s, 0.0) * a; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

namespace {

Eigensystem eigh2(const HermitianMatrix& m) {
    Eigensystem es(2);
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const cplx b = m(0, 1);
    const double hb = std::abs(b);
    const double mean = 0.5 * (a + d);
    const double disc = std::hypot(0.5 * (a - d), hb);
    es.values[0] = mean - disc;
    es.values[1] = mean + disc;
    if (hb == 0.0) {
        // already diagonal; order columns by the diagonal
        if (a <= d) {
            es.vectors(0, 0) = 1.0;
            es.vectors(1, 1) = 1.0;
        } else {
            es.vectors(1, 0) = 1.0;
            es.vectors(0, 1) = 1.0;
        }
        return es;
    }
    // (A - lambda I) v = 0  =>  v = (b, lambda - a) up to phase/scale
    for (int k = 0; k < 2; ++k) {
        const double lambda = es.values[k];
        cplx v0 = b;
        cplx v1 = lambda - a;
        const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
        es.vectors(0, k) = v0 / nrm;
        es.vectors(1, k) = v1 / nrm;
    }
    return es;
}

// One complex Jacobi rotation zeroing A(p,q). A is updated in place,
// V accumulates the unitary.
void jacobi_rotate(ComplexMatrix& A, ComplexMatrix& V, int p, int q) {
    const cplx apq = A(p, q);
    const double b = std::abs(apq);
    if (b == 0.0) return;
    const cplx phase = apq / b;  // e^{i phi}
    const double app = A(p, p).real();
    const double aqq = A(q, q).real();
    const double tau = (aqq - app) / (2.0 * b);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const cplx s = (t * c) * phase;

    const int n = A.dim();
    // columns: A <- A J with J(p,p)=c, J(p,q)=s, J(q,p)=-conj(s), J(q,q)=c
    for (int r = 0; r < n; ++r) {
        const cplx arp = A(r, p);
        const cplx arq = A(r, q);
        A(r, p) = c * arp - std::conj(s) * arq;
        A(r, q) = s * arp + c * arq;
    }
    // rows: A <- J^dagger A
    for (int col = 0; col < n; ++col) {
        const cplx apc = A(p, col);
        const cplx aqc = A(q, col);
        A(p, col) = c * apc - s * aqc;
        A(q, col) = std::conj(s) * apc + c * aqc;
    }
    A(p, q) = 0.0;
    A(q, p) = 0.0;
    A(p, p) = cplx(A(p, p).real(), 0.0);
    A(q, q) = cplx(A(q, q).real(), 0.0);
    for (int r = 0; r < n; ++r) {
        const cplx vrp = V(r, p);
        const cplx vrq = V(r, q);
        V(r, p) = c * vrp - std::conj(s) * vrq;
        V(r, q) = s * vrp + c * vrq;
    }
}

double off_diagonal_mass(const ComplexMatrix& A) {
    double s = 0.0;
    for (int r = 0; r < A.dim(); ++r)
        for (int c = 0; c < A.dim(); ++c)
            if (r != c) s += std::norm(A(r, c));
    return std::sqrt(s);
}

Eigensystem eigh_jacobi(const HermitianMatrix& m) {
    const int n = m.dim();
    ComplexMatrix A = m.matrix();
    ComplexMatrix V = ComplexMatrix::identity(n);

    double scale = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) scale = std::max(scale, std::abs(A(r, c)));
    const double tol = 1e-13 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < 64; ++sweep) {
        if (off_diagonal_mass(A) <= tol) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(A(p, q)) > tol * 1e-3) jacobi_rotate(A, V, p, q);
    }

    Eigensystem es(n);
    std::array<int, 4> order{};
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.begin() + n,
              [&](int i, int j) { return A(i, i).real() < A(j, j).real(); });
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        es.values[static_cast<std::size_t>(k)] = A(src, src).real();
        for (int r = 0; r < n; ++r) es.vectors(r, k) = V(r, src);
    }
    return es;
}

}  // namespace

Eigensystem eigh(const HermitianMatrix& m) {
    if (m.dim() == 1) {
        Eigensystem es(1);
        es.values[0] = m(0, 0).real();
        es.vectors(0, 0) = 1.0;
        return es;
    }
    if (m.dim() == 2) return eigh2(m);
    return eigh_jacobi(m);
}

double min_eigenvalue(const HermitianMatrix& m) {
    return eigh(m).values[0];
}

}  // namespace qthermo
