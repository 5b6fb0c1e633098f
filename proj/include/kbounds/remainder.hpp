#pragma once

// Remainder of the Taylor expansion of (1-t)^delta about t = 0,
//
//   (1-t)^delta = sum_{k<n} (-delta)_k / k! t^k + rho_n(delta, t) t^n,
//
// and the extreme values of rho_n over [0,1) that drive every enclosure of
// the Kummer expansion.

#include <optional>
#include <vector>

#include "kbounds/enclosure.hpp"

namespace kbounds {

/// c_k = (-delta)_k / k! for k = 0..count-1, built by c_{k+1} = c_k (k - delta) / (k + 1).
std::vector<double> binomial_coefficients(double delta, int count);

/// (-delta)_n / n!, the value rho_n(delta, 0).
double remainder_at_zero(double delta, int n);

/// -(1-delta)_{n-1} / (n-1)!, the t -> 1 limit of rho_n for delta > 0.
double remainder_limit_term(double delta, int n);

/// lim_{t->1-} rho_n(delta, t) for delta >= 0 (0 when delta = 0).
double remainder_at_one(double delta, int n);

struct RemainderCoefficients {
    int n = 1;
    double delta = 0.0;
    double r = 0.0;             ///< inf of rho_n over [0,1)
    std::optional<double> R;    ///< sup of rho_n; empty (unbounded) for delta < 0
    std::optional<double> S;    ///< substitute upper coefficient, delta in (-1,0) only
    double X = 0.0;             ///< coefficient of the absolute error bound

    /// Coefficient used by the upper enclosure: R for delta >= 0, S otherwise.
    double upper() const { return R ? *R : *S; }
};

/// r, R, S and X for alpha > 0, delta > -1, n >= 1.
RemainderCoefficients bound_coefficients(double alpha, double delta, int n);

/// S_n(alpha, delta) = (-delta)_{n-1}/(n-1)! ((alpha+n)/(delta+1) - (alpha+delta+1)/n).
double substitute_upper_coefficient(double alpha, double delta, int n);

/// Leading large-n behaviour of X_n: 1/|delta Gamma(-delta)| n^{-delta} for
/// noninteger delta > 0, 1/((1+delta) Gamma(-delta)) n^{-delta} for
/// delta in (-1,0). Throws DomainError for integer delta.
double coefficient_asymptote(double alpha, double delta, int n);

/// rho_n(delta, t) from its integral representation by quadrature. Test
/// oracle only; the enclosures never call it.
double rho_numeric(double delta, int n, double t);

}  // namespace kbounds
