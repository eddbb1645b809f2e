#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "qthermo/error.hpp"

namespace qthermo {

using cplx = std::complex<double>;

// Dense complex matrix, row-major, dim in {1..4}. Fixed backing storage keeps
// the 2x2 and 4x4 hot paths allocation free.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim) : dim_(dim) {
        if (dim < 1 || dim > 4) throw Error(errc::bad_config, "ComplexMatrix dimension must be 1..4");
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }
    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    int dim() const noexcept { return dim_; }

    cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * dim_ + c)]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * dim_ + c)]; }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    // max |a_rc - conj(a_cr)|
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

private:
    int dim_;
    std::array<cplx, 16> a_{};
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Carrier for density matrices and SLD operators. Construction via from()
// enforces the Hermiticity invariant; the unchecked path is for code that
// builds conjugate entry pairs explicitly.
class HermitianMatrix {
public:
    static HermitianMatrix from(const ComplexMatrix& m, double tol = 1e-12) {
        if (!m.is_hermitian(tol)) throw Error(errc::bad_config, "matrix is not Hermitian within tolerance");
        return HermitianMatrix(m);
    }
    static HermitianMatrix from_unchecked(const ComplexMatrix& m) { return HermitianMatrix(m); }
    static HermitianMatrix zero(int dim) { return HermitianMatrix(ComplexMatrix::zero(dim)); }
    static HermitianMatrix identity(int dim) { return HermitianMatrix(ComplexMatrix::identity(dim)); }

    int dim() const noexcept { return m_.dim(); }
    const cplx& operator()(int r, int c) const { return m_(r, c); }
    const ComplexMatrix& matrix() const noexcept { return m_; }

    double trace_real() const { return m_.trace().real(); }
    double hermiticity_defect() const { return m_.hermiticity_defect(); }

private:
    explicit HermitianMatrix(const ComplexMatrix& m) : m_(m) {}
    ComplexMatrix m_;
};

struct Eigensystem {
    int dim = 0;
    std::array<double, 4> values{};  // ascending
    ComplexMatrix vectors;           // columns are orthonormal eigenvectors

    explicit Eigensystem(int d) : dim(d), vectors(d) {}
};

// Closed form for dim 2, cyclic complex Jacobi sweeps for dim 3/4.
// Off-diagonal mass is driven below 1e-13 * max|entry|.
Eigensystem eigh(const HermitianMatrix& m);

double min_eigenvalue(const HermitianMatrix& m);

}  // namespace qthermo
