#pragma once

// Lower incomplete Gamma gamma(nu, x) = int_0^x s^{nu-1} e^{-s} ds:
// closed forms for integer order, two-sided approximant families, and the
// scaled form gamma(nu, x) / x^nu used by the Kummer expansion.

#include <variant>

#include "kbounds/enclosure.hpp"

namespace kbounds {

/// gamma(k, x) for integer k >= 1 by the upward recursion from 1 - e^{-x}.
double gamma_elementary(int k, double x);

/// gamma(nu, x) / x^nu for nu > 0, x >= 0, with the limit 1/nu at x = 0.
double scaled_gamma(double nu, double x);

/// gamma(nu, x) for nu > 0, x >= 0.
double lower_gamma(double nu, double x);

/// Truncated-exponential bounds tau_m <= gamma(nu, x) <= T_m.
Enclosure taylor_enclosure_gamma(double nu, double x, int m);

/// Laurent (integration by parts) bounds; nu in (0,1), x > 0, q >= 0.
Enclosure laurent_enclosure_gamma(double nu, double x, int q);

/// Rational tail factors pi_q <= Pi_q of the Pade bounds.
struct PadeFactors {
    double lower;  ///< pi_q
    double upper;  ///< Pi_q
};

/// Closed-form Pade factors for q in {0, 1, 2}; throws UnsupportedOrder otherwise.
PadeFactors pade_factors(double nu, double x, int q);

/// Laurent factors lambda_q <= Lambda_q.
struct LaurentFactors {
    double lower;  ///< lambda_q
    double upper;  ///< Lambda_q
};

LaurentFactors laurent_factors(double nu, double x, int q);

/// Pade bounds; nu in (0,1), x > 0, q in {0, 1, 2}.
Enclosure pade_enclosure_gamma(double nu, double x, int q);

/// Maps an enclosure of gamma(nu, x) to one of gamma(nu + steps, x) through
/// gamma(nu + 1, x) = nu gamma(nu, x) - x^nu e^{-x}. Each step multiplies by
/// nu > 0 so the ordering of the bounds is preserved.
Enclosure propagate_upward(Enclosure at_nu, double nu, double x, int steps);

/// Large-x family used by the matched enclosure.
enum class TailFamily { pade, laurent };

/// Best of the Taylor bounds (at nu) and the tail bounds (at the fractional
/// part of nu, carried upward by the recursion). Integer nu gives the exact
/// closed form with zero width; at x = 0 only the Taylor family applies.
Enclosure matched_enclosure_gamma(double nu, double x, int m, int q,
                                  TailFamily tail = TailFamily::pade);

namespace method {
struct Elementary {};
struct Taylor {
    int m = 4;
};
struct Laurent {
    int q = 1;
};
struct Pade {
    int q = 1;
};
struct Matched {
    int m = 4;
    int q = 1;
    TailFamily tail = TailFamily::pade;
};
}  // namespace method

using GammaEnclosureMethod = std::variant<method::Elementary, method::Taylor, method::Laurent,
                                          method::Pade, method::Matched>;

/// Encloses gamma(nu, x) with the selected family.
///
/// Taylor bounds apply at any nu > 0. Laurent and Pade apply at the
/// fractional part of nu and are carried upward; for integer nu they, like
/// Matched, return the exact closed form. Elementary requires integer nu.
/// Laurent and Pade require x > 0 for noninteger nu.
Enclosure enclose_gamma(double nu, double x, const GammaEnclosureMethod& how);

/// Encloses gamma(nu, x) / x^nu; x = 0 gives the exact limit 1/nu.
Enclosure enclose_scaled_gamma(double nu, double x, const GammaEnclosureMethod& how);

}  // namespace kbounds
