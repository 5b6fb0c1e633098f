#include "kbounds/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace kbounds {

namespace {

double ulp_of(double v) {
    const double a = std::fabs(v);
    if (!std::isfinite(a)) return std::numeric_limits<double>::infinity();
    return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

}  // namespace

Enclosure Enclosure::checked(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi)) {
        throw EnclosureCollapse("enclosure bound is NaN", lo, hi);
    }
    if (lo <= hi) return {lo, hi};
    const double gap = lo - hi;
    const double scale = std::max(std::fabs(lo), std::fabs(hi));
    if (gap <= kCollapseUlps * ulp_of(scale)) {
        const double mid = hi + 0.5 * gap;
        return {mid, mid};
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "enclosure collapsed: lo=" << lo << " > hi=" << hi;
    throw EnclosureCollapse(msg.str(), lo, hi);
}

bool Enclosure::unbounded_above() const { return std::isinf(hi) && hi > 0; }

Enclosure intersect(const Enclosure& a, const Enclosure& b) {
    return Enclosure::checked(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

double relative_uncertainty(const Enclosure& e) {
    const double num = e.hi - e.lo;
    if (num == 0.0) return 0.0;
    const double den = std::fabs(e.hi + e.lo);
    if (!(den >= 1e-300)) return std::numeric_limits<double>::infinity();
    return num / den;
}

}  // namespace kbounds
