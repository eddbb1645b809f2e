#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "qthermo/error.hpp"

namespace qthermo {

// Margin kept from the ball surface: SLD solves and the prior densities are
// singular at r = 1, so "interior" means r < 1 - kBoundaryEps.
inline constexpr double kBoundaryEps = 1e-9;

// A point of the unit ball parameterizing a two-level density matrix.
// dim == 3: coordinates (x, y, z), the complex family.
// dim == 5: coordinates (u, v, x, y, z), the quaternionic family.
class BlochPoint {
public:
    static BlochPoint complex3(double x, double y, double z) {
        return BlochPoint(3, {x, y, z, 0.0, 0.0});
    }
    static BlochPoint quaternionic5(double u, double v, double x, double y, double z) {
        return BlochPoint(5, {u, v, x, y, z});
    }
    // family index n in {1, 2}; ball dimension d = 2n + 1
    static BlochPoint origin(int family_n) {
        return BlochPoint(2 * family_n + 1, {0.0, 0.0, 0.0, 0.0, 0.0});
    }
    static BlochPoint from_coords(const double* coords, int dim) {
        std::array<double, 5> c{};
        for (int i = 0; i < dim; ++i) c[static_cast<std::size_t>(i)] = coords[i];
        return BlochPoint(dim, c);
    }

    int dim() const noexcept { return dim_; }
    int family() const noexcept { return (dim_ - 1) / 2; }  // 1 or 2
    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    double radius_squared() const noexcept {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) s += c_[static_cast<std::size_t>(i)] * c_[static_cast<std::size_t>(i)];
        return s;
    }
    double radius() const noexcept { return std::sqrt(radius_squared()); }

    bool in_ball() const noexcept { return radius() <= 1.0; }
    bool interior() const noexcept { return radius() < 1.0 - kBoundaryEps; }

    void require_in_ball() const {
        if (!in_ball()) throw Error(errc::radius_exceeded, "Bloch vector radius exceeds 1");
    }
    void require_interior() const {
        if (!interior()) throw Error(errc::boundary_point, "Bloch vector too close to the ball surface");
    }

private:
    BlochPoint(int dim, std::array<double, 5> c) : dim_(dim), c_(c) {
        if (dim != 3 && dim != 5) throw Error(errc::bad_config, "BlochPoint dimension must be 3 or 5");
    }

    int dim_;
    std::array<double, 5> c_;
};

}  // namespace qthermo
