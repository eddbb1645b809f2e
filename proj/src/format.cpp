#include "qthermo/format.hpp"

#include <charconv>

namespace qthermo {

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace qthermo
