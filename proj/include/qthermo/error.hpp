#pragma once

#include <stdexcept>
#include <string>

namespace qthermo {

// Failure categories. The CLI maps these onto process exit codes:
// domain/usage problems -> 2, numerical failures -> 3, I/O -> 4.
enum class errc {
    radius_exceeded,        // Bloch vector outside the closed unit ball
    boundary_point,         // point too close to the ball surface for the operation
    singular_state,         // eigenvalue pair sum below the solvable threshold
    tolerance_not_reached,  // adaptive quadrature ran out of subdivisions
    domain_exceeded,        // scalar argument outside the supported range
    overflow,               // result would overflow double precision
    io_failure,
    bad_config,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline bool is_domain_error(errc c) noexcept {
    return c == errc::radius_exceeded || c == errc::boundary_point ||
           c == errc::domain_exceeded || c == errc::bad_config;
}

}  // namespace qthermo
