#include "kbounds/scan.hpp"

#include <algorithm>
#include <cmath>

#include "kbounds/enclosure.hpp"

namespace kbounds::scan {

namespace {

void require_range(double a, double b, double step) {
    if (!(a <= b) || !(step > 0.0)) throw DomainError("scan: requires a <= b and step > 0");
}

std::size_t cells(double a, double b, double step) {
    return static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9));
}

}  // namespace

std::vector<Bracket> sign_changes(const Curve& f, double a, double b, double step,
                                  double resolution) {
    require_range(a, b, step);
    std::vector<Bracket> out;
    const std::size_t count = cells(a, b, step);
    double left = a;
    bool left_sign = f(a) >= 0.0;
    for (std::size_t i = 1; i <= count; ++i) {
        const double right = std::min(b, a + static_cast<double>(i) * step);
        const bool right_sign = f(right) >= 0.0;
        if (right_sign != left_sign) {
            double lo = left;
            double hi = right;
            while (hi - lo > resolution) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if ((f(mid) >= 0.0) == left_sign) lo = mid; else hi = mid;
            }
            out.push_back({lo, hi});
        }
        left = right;
        left_sign = right_sign;
    }
    return out;
}

Bracket outward(Bracket b, double cell) {
    // Scale first so that e.g. 1.92 * 100 lands on an integer before rounding.
    const double lo = std::floor(b.lo / cell + 1e-9) * cell;
    const double hi = std::ceil(b.hi / cell - 1e-9) * cell;
    return {lo, hi};
}

Peak maximize(const Curve& f, double a, double b, double step, double resolution) {
    require_range(a, b, step);
    const std::size_t count = cells(a, b, step);
    Peak best{a, f(a)};
    for (std::size_t i = 1; i <= count; ++i) {
        const double x = std::min(b, a + static_cast<double>(i) * step);
        const double v = f(x);
        if (v > best.value) best = {x, v};
    }
    double lo = std::max(a, best.x - step);
    double hi = std::min(b, best.x + step);
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > resolution) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        }
    }
    const double x = 0.5 * (lo + hi);
    const double v = f(x);
    for (const Peak& p : {Peak{x, v}, Peak{x1, f1}, Peak{x2, f2}}) {
        if (p.value > best.value) best = p;
    }
    return best;
}

}  // namespace kbounds::scan
