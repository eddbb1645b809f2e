// Test-side oracles, kept independent of the library code paths they check.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qthermo/bloch.hpp"
#include "qthermo/quaternion.hpp"
#include "qthermo/rng.hpp"

namespace oracles {

// Quaternion product by brute-force expansion over the basis multiplication
// table, never through the closed-form component formulas.
inline qthermo::Quaternion quat_mul_table(const qthermo::Quaternion& p,
                                          const qthermo::Quaternion& q) {
    // table[a][b] = (sign, basis index) for e_a * e_b with e = (1, i, j, k)
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    static const int basis[4][4] = {{0, 1, 2, 3},
                                    {1, 0, 3, 2},
                                    {2, 3, 0, 1},
                                    {3, 2, 1, 0}};
    const double pc[4] = {p.w, p.x, p.y, p.z};
    const double qc[4] = {q.w, q.x, q.y, q.z};
    double out[4] = {0, 0, 0, 0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out[basis[a][b]] += sign[a][b] * pc[a] * qc[b];
    return {out[0], out[1], out[2], out[3]};
}

// LU determinant with partial pivoting for small real matrices.
inline double det_lu(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        if (a[k][k] == 0.0) return 0.0;
        det *= a[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return det;
}

// Gaussian-elimination determinant for small complex matrices.
inline std::complex<double> det_complex(std::vector<std::vector<std::complex<double>>> a) {
    const std::size_t n = a.size();
    std::complex<double> det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        if (std::abs(a[k][k]) == 0.0) return 0.0;
        det *= a[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const std::complex<double> f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return det;
}

// int_{-1}^{1} z^(2a) (1-z^2)^b dz = B(a + 1/2, b + 1) via lgamma.
inline double even_moment_beta_integral(int a, double b) {
    const double la = std::lgamma(a + 0.5);
    const double lb = std::lgamma(b + 1.0);
    const double lab = std::lgamma(a + b + 1.5);
    return std::exp(la + lb - lab);
}

// Surface area of S^(d-1): 2 pi^(d/2) / Gamma(d/2).
inline double surface_area_gamma(int d) {
    return 2.0 * std::pow(std::acos(-1.0), 0.5 * d) / std::exp(std::lgamma(0.5 * d));
}

// Uniform radius in [0, rmax], uniform direction (design choice for QFI
// property points: stays clear of near-singular states).
inline qthermo::BlochPoint random_interior_point(qthermo::SplitMix64& rng, int dim,
                                                 double rmax = 0.95) {
    double g[6];
    double norm2 = 0.0;
    do {
        for (int k = 0; k < dim; k += 2) rng.gaussian_pair(g[k], g[k + 1]);
        norm2 = 0.0;
        for (int k = 0; k < dim; ++k) norm2 += g[k] * g[k];
    } while (norm2 < 1e-24);
    const double r = rmax * rng.uniform01();
    const double scale = r / std::sqrt(norm2);
    double coords[5];
    for (int k = 0; k < dim; ++k) coords[k] = scale * g[k];
    return qthermo::BlochPoint::from_coords(coords, dim);
}

// Random rotation by Gram-Schmidt on a Gaussian matrix.
inline std::vector<std::vector<double>> random_rotation(qthermo::SplitMix64& rng, int d) {
    std::vector<std::vector<double>> m(static_cast<std::size_t>(d),
                                       std::vector<double>(static_cast<std::size_t>(d)));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; c += 2) {
            double g0, g1;
            rng.gaussian_pair(g0, g1);
            m[r][c] = g0;
            if (c + 1 < d) m[r][c + 1] = g1;
        }
    for (int r = 0; r < d; ++r) {
        for (int prev = 0; prev < r; ++prev) {
            double dot = 0.0;
            for (int c = 0; c < d; ++c) dot += m[r][c] * m[prev][c];
            for (int c = 0; c < d; ++c) m[r][c] -= dot * m[prev][c];
        }
        double norm = 0.0;
        for (int c = 0; c < d; ++c) norm += m[r][c] * m[r][c];
        norm = std::sqrt(norm);
        for (int c = 0; c < d; ++c) m[r][c] /= norm;
    }
    return m;
}

}  // namespace oracles
