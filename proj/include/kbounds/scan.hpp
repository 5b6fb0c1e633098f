#pragma once

// One-dimensional sweeps used to locate family switches and suprema along x.

#include <functional>
#include <vector>

namespace kbounds::scan {

using Curve = std::function<double(double)>;

/// Interval [lo, hi].
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Every sign change of f on [a, b]: f is sampled with the given step and each
/// change is bisected until the bracket is narrower than resolution.
/// Zero counts as nonnegative.
std::vector<Bracket> sign_changes(const Curve& f, double a, double b, double step,
                                  double resolution = 1e-9);

/// [lo, hi] widened to the enclosing multiples of cell.
Bracket outward(Bracket b, double cell = 0.01);

struct Peak {
    double x = 0.0;
    double value = 0.0;
};

/// Maximum of f on [a, b]: grid search with the given step, then golden-section
/// refinement in the two cells around the best sample.
Peak maximize(const Curve& f, double a, double b, double step, double resolution = 1e-10);

}  // namespace kbounds::scan
