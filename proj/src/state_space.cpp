#include "qthermo/state_space.hpp"

namespace qthermo {

ComplexMatrix quat_to_complex(const Quaternion& q) {
    ComplexMatrix m(2);
    m(0, 0) = cplx(q.w, q.x);
    m(0, 1) = cplx(q.y, q.z);
    m(1, 0) = cplx(-q.y, q.z);
    m(1, 1) = cplx(q.w, -q.x);
    return m;
}

HermitianMatrix density_complex(const BlochPoint& p) {
    if (p.dim() != 3) throw Error(errc::bad_config, "density_complex expects a 3-ball point");
    p.require_in_ball();
    const double x = p[0], y = p[1], z = p[2];
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + z);
    m(0, 1) = cplx(0.5 * x, -0.5 * y);
    m(1, 0) = cplx(0.5 * x, 0.5 * y);
    m(1, 1) = 0.5 * (1.0 - z);
    return HermitianMatrix::from_unchecked(m);
}

HermitianMatrix density_quaternionic(const BlochPoint& p) {
    if (p.dim() != 5) throw Error(errc::bad_config, "density_quaternionic expects a 5-ball point");
    p.require_in_ball();
    const double u = p[0], v = p[1], x = p[2], y = p[3], z = p[4];

    // 2x2 quaternionic matrix: [[1+z, qbar], [q, 1-z]] / 2 with q = x + iy + ju + kv
    const Quaternion q{x, y, u, v};
    const Quaternion qbar = q.conjugate();
    const ComplexMatrix tl = quat_to_complex(Quaternion{0.5 * (1.0 + z), 0, 0, 0});
    const ComplexMatrix br = quat_to_complex(Quaternion{0.5 * (1.0 - z), 0, 0, 0});
    const ComplexMatrix tr = quat_to_complex(0.5 * qbar);
    const ComplexMatrix bl = quat_to_complex(0.5 * q);

    // assemble blocks, then halve for unit trace
    ComplexMatrix m(4);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            m(r, c) = 0.5 * tl(r, c);
            m(r, c + 2) = 0.5 * tr(r, c);
            m(r + 2, c) = 0.5 * bl(r, c);
            m(r + 2, c + 2) = 0.5 * br(r, c);
        }
    return HermitianMatrix::from_unchecked(m);
}

HermitianMatrix density(const BlochPoint& p) {
    return p.dim() == 3 ? density_complex(p) : density_quaternionic(p);
}

HermitianMatrix density_derivative(int family_n, int axis) {
    if (family_n != 1 && family_n != 2) throw Error(errc::bad_config, "family index must be 1 or 2");
    const int dim = 2 * family_n + 1;
    if (axis < 0 || axis >= dim) throw Error(errc::bad_config, "derivative axis out of range");
    double unit[5] = {0, 0, 0, 0, 0};
    unit[axis] = 1.0;
    const BlochPoint e = BlochPoint::from_coords(unit, dim);
    const BlochPoint o = BlochPoint::origin(family_n);
    // affine parameterization: d rho / d theta_axis = rho(e_axis) - rho(0), exactly
    const ComplexMatrix d = density(e).matrix() - density(o).matrix();
    return HermitianMatrix::from_unchecked(d);
}

}  // namespace qthermo
