#pragma once

// Recomputation of the published worked examples: each line pairs a
// published statement with the value obtained from this library.

#include <string>
#include <string_view>
#include <vector>

namespace kbounds::examples {

struct ReportLine {
    std::string quantity;
    std::string published;
    std::string recomputed;
    bool pass = false;
};

/// Selectors accepted by reproduce(): i, ii, iii, gamma-half, footnote.
const std::vector<std::string>& selectors();

/// Throws DomainError for an unknown selector.
std::vector<ReportLine> reproduce(std::string_view which);

}  // namespace kbounds::examples
