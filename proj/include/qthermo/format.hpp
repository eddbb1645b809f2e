#pragma once

#include <string>

namespace qthermo {

// Shortest decimal representation that round-trips to the same double
// (std::to_chars). Used for every CSV/JSON numeric field so repeated runs
// are byte-identical. Negative zero is normalized to "0".
std::string format_double(double v);

}  // namespace qthermo
