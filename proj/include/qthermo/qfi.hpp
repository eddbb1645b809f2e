#pragma once

#include <array>

#include "qthermo/bloch.hpp"
#include "qthermo/hermitian.hpp"

namespace qthermo {

// Real symmetric quantum Fisher information matrix, dim 3 or 5, anchored at
// the Bloch point it was evaluated at.
class QFIMatrix {
public:
    explicit QFIMatrix(const BlochPoint& at) : dim_(at.dim()), at_(at) {}

    int dim() const noexcept { return dim_; }
    const BlochPoint& at() const noexcept { return at_; }

    double& operator()(int r, int c) { return m_[static_cast<std::size_t>(r * dim_ + c)]; }
    double operator()(int r, int c) const { return m_[static_cast<std::size_t>(r * dim_ + c)]; }

private:
    int dim_;
    BlochPoint at_;
    std::array<double, 25> m_{};
};

// Explicit matrix: prefactor 1/(1-r^2); off-diagonal (a,b) entry a*b;
// diagonal entry for coordinate a equal to 1 - (r^2 - a^2).
QFIMatrix qfi_closed_form(const BlochPoint& p);

// Determinant of the closed form, which collapses to 1/(1-r^2).
double qfi_determinant(const BlochPoint& p);

// Hermitian L solving rho L + L rho = 2 drho, computed in the eigenbasis of
// rho: L_ab = 2 (drho)_ab / (lambda_a + lambda_b).
HermitianMatrix sld_solve(const HermitianMatrix& rho, const HermitianMatrix& drho);

// SLD route: H_ab = 1/2 Tr[rho (L_a L_b + L_b L_a)] with exact affine
// density derivatives. Must reproduce the closed form; the pair is the
// library's central cross-check.
QFIMatrix qfi_numeric(const BlochPoint& p);

double max_abs_diff(const QFIMatrix& a, const QFIMatrix& b);
double determinant_lu(const QFIMatrix& m);       // partial-pivot LU
bool is_positive_definite(const QFIMatrix& m);   // Cholesky probe

}  // namespace qthermo
