#pragma once

// Classical-function kernel: complete Gamma, Beta, rising and falling
// factorials, and the remainder weights of the truncated exponential.

namespace kbounds {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(double v) {
    return v > 0 ? Sign::positive : (v < 0 ? Sign::negative : Sign::zero);
}

inline int to_int(Sign s) { return static_cast<int>(s); }

/// Complete Gamma on R minus the nonpositive integers.
///
/// Lanczos rational approximation for arguments >= 1/2 and the reflection
/// formula below that. Relative accuracy is around 1e-15 over the range
/// where the result is representable. Throws PoleError at 0, -1, -2, ...
double gamma_complete(double nu);

/// log|Gamma(nu)| for nu > 0. Used where Gamma itself would overflow.
double log_gamma(double nu);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
///
/// Always an iterated product: exact zeros for a in {0,-1,-2,...} with
/// k >= 1-a, and exact signs.
double pochhammer(double a, int k);

/// Sign of (-delta)_k from the closed-form sign tables (delta > -1).
/// Agrees with sign_of(pochhammer(-delta, k)).
Sign pochhammer_sign(double delta, int k);

/// Falling factorial <mu>_h = mu (mu-1) ... (mu-h+1), <mu>_0 = 1.
double falling_factorial(double mu, int h);

/// chi^+ = max(chi, 0)
inline double positive_part(double chi) { return chi > 0 ? chi : 0.0; }
/// chi^- = min(chi, 0)
inline double negative_part(double chi) { return chi < 0 ? chi : 0.0; }

/// Euler Beta B(mu, nu) = Gamma(mu) Gamma(nu) / Gamma(mu + nu), mu, nu > 0.
double beta(double mu, double nu);

/// Extremes of (-1)^m e^{-c} for c in [0, x].
struct TaylorWeights {
    double u;  ///< min((-1)^m, (-1)^m e^{-x})
    double U;  ///< max((-1)^m, (-1)^m e^{-x})
};

/// Requires m >= 1 and x >= 0.
TaylorWeights taylor_weights(int m, double x);

/// True when nu is a (finite) integer.
bool is_integer(double nu);

}  // namespace kbounds
