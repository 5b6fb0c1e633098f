#pragma once

// Independent reference values for N(alpha, delta, x) and gamma(nu, x).
//
// Everything here runs in long double and relies only on the C library's
// exp/pow/log and tgammal. Nothing in the enclosure machinery calls it, so
// containment checks against these values are two-sided evidence.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "kbounds/params.hpp"

namespace kbounds {

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;      ///< absolute error estimate, >= 0
    std::size_t evaluations = 0;
};

/// The requested tolerance could not be reached; carries the best value.
class ToleranceNotMet : public std::runtime_error {
public:
    ToleranceNotMet(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_(best) {}
    const QuadratureResult& best() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

namespace oracle {

inline constexpr double kDefaultTolerance = 1e-12;

/// Integrand on [0,1] receiving both t and 1-t, each to full relative
/// accuracy, so endpoint singularities can be evaluated without cancellation.
using UnitIntegrand = std::function<long double(long double t, long double one_minus_t)>;

/// Double-exponential (tanh-sinh) quadrature over [0,1].
///
/// Halves the step until successive levels differ by at most
/// tol * |value|; that difference is reported as est_error.
/// min_level forces at least that many halvings. Throws ToleranceNotMet.
QuadratureResult integrate_unit(const UnitIntegrand& f, double tol = kDefaultTolerance,
                                int min_level = 0);

/// N(alpha, delta, x) = int_0^1 t^{alpha-1} (1-t)^delta e^{-x t} dt, x >= 0.
QuadratureResult n_reference(const KummerParams& p, double x, double tol = kDefaultTolerance,
                             int min_level = 0);

/// gamma(nu, x): alternating power series for x <= nu + 1 (quadrature when
/// that series cancels past quad precision), otherwise
/// Gamma(nu) minus the Legendre continued fraction for the upper function.
QuadratureResult gamma_reference(double nu, double x, double tol = kDefaultTolerance);

/// The two internal routes of gamma_reference, exposed for the seam check.
long double gamma_by_series(double nu, double x, double tol, long double* tail_bound = nullptr);
long double gamma_by_continued_fraction(double nu, double x, double tol);

}  // namespace oracle
}  // namespace kbounds
