#pragma once

#include <stdexcept>
#include <string>

namespace kbounds {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Complete Gamma requested at a nonpositive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Approximant order for which no closed form is implemented.
class UnsupportedOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rounding inverted an enclosure by more than the collapse tolerance.
class EnclosureCollapse : public std::runtime_error {
public:
    EnclosureCollapse(const std::string& what, double lo, double hi)
        : std::runtime_error(what), lo_(lo), hi_(hi) {}
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// Bounds are evaluated in plain double precision (no directed rounding).
/// An inversion lo > hi of at most this many ulps of max(|lo|,|hi|) is
/// attributed to rounding and collapsed to the midpoint.
inline constexpr double kCollapseUlps = 4.0;

/// A pair of real bounds bracketing a scalar quantity.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    static Enclosure exact(double value) { return {value, value}; }

    /// Builds an enclosure, applying the collapse policy to inverted input.
    /// Throws EnclosureCollapse when the inversion exceeds kCollapseUlps.
    static Enclosure checked(double lo, double hi);

    double width() const { return hi - lo; }
    double midpoint() const { return lo + 0.5 * (hi - lo); }
    bool unbounded_above() const;

    /// lo - slack <= value <= hi + slack
    bool contains(double value, double slack = 0.0) const {
        return lo - slack <= value && value <= hi + slack;
    }
};

/// Pointwise best of two enclosures of the same quantity.
Enclosure intersect(const Enclosure& a, const Enclosure& b);

/// Relative uncertainty (hi - lo) / |hi + lo|.
///
/// Returns 0 for a zero-width enclosure and +infinity when the denominator
/// is below 1e-300, so grid sweeps never abort on degenerate points.
double relative_uncertainty(const Enclosure& e);

}  // namespace kbounds
