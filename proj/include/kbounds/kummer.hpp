#pragma once

// Two-sided enclosures of the reparametrized Kummer function
//
//   N(alpha, delta, x) = int_0^1 t^{alpha-1} (1-t)^delta e^{-x t} dt
//                      = sum_k (-delta)_k / k! gamma(alpha+k, x) / x^{alpha+k}
//
// by finite sums of incomplete Gammas, by its Taylor polynomial, and by
// elementary substitutes; plus the truncation-error estimators built on the
// same coefficients.

#include <span>

#include "kbounds/enclosure.hpp"
#include "kbounds/incgamma.hpp"
#include "kbounds/params.hpp"
#include "kbounds/remainder.hpp"

namespace kbounds {

/// Signed and absolute bounds on the truncation error eps_n = N - partial sum:
/// e <= eps_n <= E and |eps_n| <= calE.
struct ErrorEstimate {
    double e = 0.0;
    double E = 0.0;
    double calE = 0.0;
};

/// sum_{k<n} (-delta)_k / k! gamma(alpha+k, x) / x^{alpha+k}
double gamma_partial_sum(const KummerParams& p, int n, double x);

/// [g_n, G_n]: the n-term partial sum plus r_n (resp. R_n or S_n) times the
/// next scaled Gamma. The upper coefficient is R_n for delta >= 0 and S_n for
/// delta in (-1, 0).
Enclosure expansion_enclosure(const KummerParams& p, int n, double x);

/// Beta-weighted Taylor bounds [t_m, T_m] of N in powers of x.
Enclosure taylor_enclosure_N(const KummerParams& p, int m, double x);

/// Coefficients (-1)^k / k! B(alpha+k, delta+1) for k < m, then B(alpha+m, delta+1) / m!.
std::vector<double> taylor_coefficients_N(const KummerParams& p, int m);

/// Best of the Gamma-expansion and Taylor enclosures. When one of them is
/// exact (x = 0 for Taylor; integer delta with n >= delta+1 for the
/// expansion) that one is returned.
Enclosure matched_enclosure_N(const KummerParams& p, int n, int m, double x);

/// Gamma-expansion enclosure with every scaled Gamma replaced by an
/// enclosure from the chosen family. Each factor takes the Gamma bound that
/// keeps the result valid given the sign of its coefficient. Requires x > 0.
Enclosure elementary_enclosure_N(const KummerParams& p, int n, const GammaEnclosureMethod& how,
                                 double x);

/// Same, with the matched Taylor(gamma_m) / Pade(gamma_q) Gamma enclosures.
Enclosure elementary_enclosure_N(const KummerParams& p, int n, int gamma_m, int gamma_q,
                                 double x);

ErrorEstimate error_bounds(const KummerParams& p, int n, double x);

/// (G_n - g_n) / |G_n + g_n|; +infinity when the denominator degenerates.
double relative_uncertainty(const KummerParams& p, int n, double x);

/// Bound X_n sigma^sigma e^{-sigma} / (alpha - sigma + n) on
/// sup_{x>0} x^sigma |eps_n(x)|, for sigma in [0, alpha].
double sup_norm_error_bound(const KummerParams& p, double sigma, int n);

/// Enclosure of the standard M(alpha, beta, x) for any real x, through the
/// matched enclosure of N on the appropriate branch.
Enclosure standard_M_enclosure(const StandardParams& s, double x, int n, int m);

/// Bounds on B(alpha, delta+1) = N(alpha, delta, 0) from the n-term expansion.
Enclosure beta_enclosure(const KummerParams& p, int n);

/// A term p t^lambda of a power bound on psi in int_0^b psi(t) e^{-x t} dt.
struct PowerTerm {
    double coefficient;
    double exponent;  ///< > -1
};

/// sum_k p_k gamma(lambda_k+1, b x) / x^{lambda_k+1}: a lower (upper) bound on
/// int_0^b psi(t) e^{-x t} dt whenever psi >= (<=) sum_k p_k t^{lambda_k} on (0, b).
/// b may be +infinity (then x > 0). At x = 0 with finite b each term becomes
/// b^{lambda+1} / (lambda+1).
double watson_bound(std::span<const PowerTerm> terms, double b, double x);

}  // namespace kbounds
