#include "kbounds/remainder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kbounds/enclosure.hpp"
#include "kbounds/oracle.hpp"
#include "kbounds/special.hpp"

namespace kbounds {

namespace {

void require_parameters(double alpha, double delta, int n, const char* who) {
    if (!(alpha > 0.0)) throw DomainError(std::string(who) + ": requires alpha > 0");
    if (!(delta > -1.0)) throw DomainError(std::string(who) + ": requires delta > -1");
    if (n < 1) throw DomainError(std::string(who) + ": requires n >= 1");
}

}  // namespace

std::vector<double> binomial_coefficients(double delta, int count) {
    std::vector<double> c;
    if (count <= 0) return c;
    c.reserve(static_cast<std::size_t>(count));
    double v = 1.0;
    for (int k = 0; k < count; ++k) {
        c.push_back(v);
        v *= (k - delta) / (k + 1);
    }
    return c;
}

double remainder_at_zero(double delta, int n) {
    if (n < 0) throw DomainError("remainder_at_zero: requires n >= 0");
    double v = 1.0;
    for (int k = 0; k < n; ++k) v *= (k - delta) / (k + 1);
    return v;
}

double remainder_limit_term(double delta, int n) {
    if (n < 1) throw DomainError("remainder_limit_term: requires n >= 1");
    double v = 1.0;  // (1-delta)_j / j!
    for (int j = 0; j < n - 1; ++j) v *= (1.0 - delta + j) / (j + 1);
    return -v;
}

double remainder_at_one(double delta, int n) {
    if (!(delta >= 0.0)) throw DomainError("remainder_at_one: rho_n is unbounded for delta < 0");
    if (delta == 0.0) return 0.0;
    return remainder_limit_term(delta, n);
}

double substitute_upper_coefficient(double alpha, double delta, int n) {
    require_parameters(alpha, delta, n, "substitute_upper_coefficient");
    return remainder_at_zero(delta, n - 1) *
           ((alpha + n) / (delta + 1.0) - (alpha + delta + 1.0) / n);
}

RemainderCoefficients bound_coefficients(double alpha, double delta, int n) {
    require_parameters(alpha, delta, n, "bound_coefficients");
    RemainderCoefficients out;
    out.n = n;
    out.delta = delta;
    const double at_zero = remainder_at_zero(delta, n);
    if (delta < 0.0) {
        out.r = at_zero;
        out.S = substitute_upper_coefficient(alpha, delta, n);
        out.X = *out.S;
        return out;
    }
    // rho_n is monotone in t, so its extremes are the two endpoint values.
    const double at_one = remainder_at_one(delta, n);
    out.r = std::min(at_zero, at_one);
    out.R = std::max(at_zero, at_one);
    out.X = std::max(std::fabs(at_zero), std::fabs(at_one));

    // The direction of monotonicity is sign((-delta)_{n+1}).
    if (at_zero != at_one) {
        const int slope = to_int(pochhammer_sign(delta, n + 1));
        const bool increasing = at_one > at_zero;
        if ((slope > 0) != increasing) {
            throw std::logic_error("bound_coefficients: monotonicity disagrees with sign table");
        }
    }
    return out;
}

double coefficient_asymptote(double alpha, double delta, int n) {
    require_parameters(alpha, delta, n, "coefficient_asymptote");
    if (is_integer(delta)) {
        throw DomainError("coefficient_asymptote: undefined for integer delta");
    }
    const double g = gamma_complete(-delta);
    const double power = std::pow(static_cast<double>(n), delta);
    if (delta > 0.0) return 1.0 / (std::fabs(delta * g) * power);
    return 1.0 / ((1.0 + delta) * g * power);
}

double rho_numeric(double delta, int n, double t) {
    if (n < 1) throw DomainError("rho_numeric: requires n >= 1");
    if (!(t >= 0.0 && t < 1.0)) throw DomainError("rho_numeric: requires t in [0,1)");
    const double prefactor = n * remainder_at_zero(delta, n);  // (-delta)_n / (n-1)!
    if (prefactor == 0.0) return 0.0;
    const long double tl = t;
    const long double exponent = static_cast<long double>(delta) - n;
    const auto integrand = [&](long double /*u*/, long double one_minus_u) {
        const long double base = (1.0L - tl) + tl * one_minus_u;  // 1 - t u
        return std::pow(one_minus_u, static_cast<long double>(n - 1)) * std::pow(base, exponent);
    };
    const QuadratureResult q = oracle::integrate_unit(integrand, 1e-11);
    return prefactor * q.value;
}

}  // namespace kbounds
