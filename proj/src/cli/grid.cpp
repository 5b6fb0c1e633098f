#include "kbounds/cli/grid.hpp"

#include <charconv>
#include <cmath>

namespace kbounds::cli {

namespace {

double parse_number(std::string_view text, std::string_view whole) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [end, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || end != last || !std::isfinite(v)) {
        throw UsageError("grid '" + std::string(whole) + "': '" + std::string(text) +
                         "' is not a finite number");
    }
    return v;
}

}  // namespace

EvalGrid EvalGrid::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw UsageError("grid '" + std::string(text) + "': expected start:stop:step");
    }
    EvalGrid g;
    g.start = parse_number(text.substr(0, first), text);
    g.stop = parse_number(text.substr(first + 1, second - first - 1), text);
    g.step = parse_number(text.substr(second + 1), text);
    if (!(g.step > 0.0)) throw UsageError("grid '" + std::string(text) + "': step must be > 0");
    if (g.start > g.stop) throw UsageError("grid '" + std::string(text) + "': start exceeds stop");
    if ((g.stop - g.start) / g.step > kMaxGridPoints) {
        throw UsageError("grid '" + std::string(text) + "': more than 1e7 points");
    }
    return g;
}

std::vector<double> EvalGrid::points() const {
    const double ratio = (stop - start) / step;
    const double nearest = std::round(ratio);
    const bool aligned = std::fabs(ratio - nearest) <= 1e-6;
    const auto count = static_cast<std::size_t>(aligned ? nearest : std::floor(ratio)) + 1;
    std::vector<double> out;
    out.reserve(count + 1);
    for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    if (aligned) {
        out.back() = stop;
    } else {
        out.push_back(stop);
    }
    return out;
}

}  // namespace kbounds::cli
