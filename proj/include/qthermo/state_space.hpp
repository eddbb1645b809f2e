#pragma once

#include "qthermo/bloch.hpp"
#include "qthermo/hermitian.hpp"
#include "qthermo/quaternion.hpp"

namespace qthermo {

// Quaternion -> complex 2x2 embedding
//   Phi(w + xi + yj + zk) = [[w + xi,  y + zi],
//                            [-y + zi, w - xi]]   (matrix i: complex unit)
// Phi is a real-algebra homomorphism: Phi(pq) = Phi(p)Phi(q), Phi(1) = I.
// One of several sign conventions compatible with the Pauli correspondence;
// the QFI closed-form cross-check pins it down.
ComplexMatrix quat_to_complex(const Quaternion& q);

// rho = 1/2 [[1+z, x-iy], [x+iy, 1-z]]; eigenvalues (1 +- r)/2.
HermitianMatrix density_complex(const BlochPoint& p);

// Entrywise Phi applied to the 2x2 quaternionic density matrix, then halved
// so the 4x4 trace is 1; eigenvalues (1 +- r)/4, each doubly degenerate.
HermitianMatrix density_quaternionic(const BlochPoint& p);

HermitianMatrix density(const BlochPoint& p);  // dispatch on p.dim()

// Exact partial derivative of the density matrix with respect to coordinate
// `axis` (the parameterization is affine, so the derivative is constant).
HermitianMatrix density_derivative(int family_n, int axis);

}  // namespace qthermo
