#include "kbounds/kummer.hpp"

#include <cmath>
#include <string>

#include "kbounds/special.hpp"

namespace kbounds {

namespace {

void require_order(int n, const char* who) {
    if (n < 1) throw DomainError(std::string(who) + ": requires order >= 1");
}

void require_nonnegative_x(double x, const char* who) {
    if (!(x >= 0.0)) throw DomainError(std::string(who) + ": requires x >= 0");
}

bool expansion_is_exact(const KummerParams& p, int n) {
    return is_integer(p.delta()) && n >= p.delta() + 1.0;
}

Enclosure scaled(const Enclosure& e, double factor) {
    return Enclosure::checked(e.lo * factor, e.hi * factor);
}

}  // namespace

double gamma_partial_sum(const KummerParams& p, int n, double x) {
    require_order(n, "gamma_partial_sum");
    require_nonnegative_x(x, "gamma_partial_sum");
    const std::vector<double> c = binomial_coefficients(p.delta(), n);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        if (c[k] == 0.0) continue;
        sum += c[k] * scaled_gamma(p.alpha() + k, x);
    }
    return sum;
}

Enclosure expansion_enclosure(const KummerParams& p, int n, double x) {
    require_order(n, "expansion_enclosure");
    require_nonnegative_x(x, "expansion_enclosure");
    const RemainderCoefficients rc = bound_coefficients(p.alpha(), p.delta(), n);
    const double partial = gamma_partial_sum(p, n, x);
    const double next = scaled_gamma(p.alpha() + n, x);
    return Enclosure::checked(partial + rc.r * next, partial + rc.upper() * next);
}

std::vector<double> taylor_coefficients_N(const KummerParams& p, int m) {
    require_order(m, "taylor_coefficients_N");
    const double a = p.alpha();
    const double b = p.delta() + 1.0;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    // B(a+k, b) = B(a, b) (a)_k / (a+b)_k, divided by k! as we go.
    double coef = beta(a, b);
    for (int k = 0; k <= m; ++k) {
        out.push_back(k < m && k % 2 == 1 ? -coef : coef);
        coef *= (a + k) / ((a + b + k) * (k + 1));
    }
    return out;
}

Enclosure taylor_enclosure_N(const KummerParams& p, int m, double x) {
    require_order(m, "taylor_enclosure_N");
    require_nonnegative_x(x, "taylor_enclosure_N");
    const std::vector<double> c = taylor_coefficients_N(p, m);
    double base = 0.0;
    double power = 1.0;
    for (int k = 0; k < m; ++k) {
        base += c[k] * power;
        power *= x;
    }
    const double tail = c[m] * power;
    const TaylorWeights w = taylor_weights(m, x);
    return Enclosure::checked(base + w.u * tail, base + w.U * tail);
}

Enclosure matched_enclosure_N(const KummerParams& p, int n, int m, double x) {
    require_nonnegative_x(x, "matched_enclosure_N");
    const Enclosure taylor = taylor_enclosure_N(p, m, x);
    if (x == 0.0) return taylor;
    const Enclosure expansion = expansion_enclosure(p, n, x);
    if (expansion_is_exact(p, n)) return expansion;
    return intersect(taylor, expansion);
}

Enclosure elementary_enclosure_N(const KummerParams& p, int n, const GammaEnclosureMethod& how,
                                 double x) {
    require_order(n, "elementary_enclosure_N");
    if (!(x > 0.0)) throw DomainError("elementary_enclosure_N: requires x > 0");
    const RemainderCoefficients rc = bound_coefficients(p.alpha(), p.delta(), n);
    const std::vector<double> c = binomial_coefficients(p.delta(), n);

    double lo = 0.0;
    double hi = 0.0;
    // A nonnegative coefficient takes the lower Gamma bound into the lower
    // sum and the upper one into the upper sum; a negative one swaps them.
    const auto accumulate = [&](double lower_coef, double upper_coef, const Enclosure& s) {
        lo += lower_coef * (lower_coef >= 0.0 ? s.lo : s.hi);
        hi += upper_coef * (upper_coef >= 0.0 ? s.hi : s.lo);
    };
    for (int k = 0; k < n; ++k) {
        if (c[k] == 0.0) continue;
        accumulate(c[k], c[k], enclose_scaled_gamma(p.alpha() + k, x, how));
    }
    const double upper = rc.upper();
    if (rc.r != 0.0 || upper != 0.0) {
        accumulate(rc.r, upper, enclose_scaled_gamma(p.alpha() + n, x, how));
    }
    return Enclosure::checked(lo, hi);
}

Enclosure elementary_enclosure_N(const KummerParams& p, int n, int gamma_m, int gamma_q,
                                 double x) {
    return elementary_enclosure_N(p, n, method::Matched{gamma_m, gamma_q, TailFamily::pade}, x);
}

ErrorEstimate error_bounds(const KummerParams& p, int n, double x) {
    require_order(n, "error_bounds");
    require_nonnegative_x(x, "error_bounds");
    const RemainderCoefficients rc = bound_coefficients(p.alpha(), p.delta(), n);
    const double s = scaled_gamma(p.alpha() + n, x);
    return {rc.r * s, rc.upper() * s, rc.X * s};
}

double relative_uncertainty(const KummerParams& p, int n, double x) {
    return relative_uncertainty(expansion_enclosure(p, n, x));
}

double sup_norm_error_bound(const KummerParams& p, double sigma, int n) {
    require_order(n, "sup_norm_error_bound");
    if (!(sigma >= 0.0 && sigma <= p.alpha())) {
        throw DomainError("sup_norm_error_bound: requires sigma in [0, alpha]");
    }
    const RemainderCoefficients rc = bound_coefficients(p.alpha(), p.delta(), n);
    const double peak = sigma == 0.0 ? 1.0 : std::pow(sigma, sigma) * std::exp(-sigma);
    return rc.X * peak / (p.alpha() - sigma + n);
}

Enclosure standard_M_enclosure(const StandardParams& s, double x, int n, int m) {
    if (!std::isfinite(x)) throw DomainError("standard_M_enclosure: requires finite x");
    const double norm = 1.0 / beta(s.alpha(), s.beta() - s.alpha());
    if (x <= 0.0) return scaled(matched_enclosure_N(s.negative_branch(), n, m, -x), norm);
    return scaled(matched_enclosure_N(s.positive_branch(), n, m, x), std::exp(x) * norm);
}

Enclosure beta_enclosure(const KummerParams& p, int n) {
    require_order(n, "beta_enclosure");
    const RemainderCoefficients rc = bound_coefficients(p.alpha(), p.delta(), n);
    const std::vector<double> c = binomial_coefficients(p.delta(), n);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += c[k] / (p.alpha() + k);
    const double last = 1.0 / (p.alpha() + n);
    return Enclosure::checked(sum + rc.r * last, sum + rc.upper() * last);
}

double watson_bound(std::span<const PowerTerm> terms, double b, double x) {
    if (!(b > 0.0)) throw DomainError("watson_bound: requires b > 0");
    require_nonnegative_x(x, "watson_bound");
    const bool infinite = std::isinf(b);
    if (infinite && x == 0.0) throw DomainError("watson_bound: x = 0 needs a finite b");
    double total = 0.0;
    for (const PowerTerm& t : terms) {
        if (!(t.exponent > -1.0)) throw DomainError("watson_bound: exponents must exceed -1");
        const double order = t.exponent + 1.0;
        double value;
        if (infinite) {
            value = gamma_complete(order) / std::pow(x, order);
        } else if (x == 0.0) {
            value = std::pow(b, order) / order;
        } else {
            value = std::pow(b, order) * scaled_gamma(order, b * x);
        }
        total += t.coefficient * value;
    }
    return total;
}

}  // namespace kbounds
