#pragma once

#include <string>

namespace kbounds {

/// Shortest decimal string that reads back to the same double ("inf", "-inf",
/// "nan" for the special values).
std::string shortest(double v);

}  // namespace kbounds
