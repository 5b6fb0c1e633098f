#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kbounds::cli {

/// Bad command-line input (exit code 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kMaxGridPoints = 1e7;

/// Closed grid start, start+step, ..., stop. Both endpoints are always
/// present: when the step does not divide the range, stop is appended after
/// the last interior point.
struct EvalGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    /// Parses "start:stop:step"; throws UsageError.
    static EvalGrid parse(std::string_view text);

    /// Interior points are start + i * step, so no error accumulates.
    std::vector<double> points() const;
};

}  // namespace kbounds::cli
