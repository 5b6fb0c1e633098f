#include "kbounds/incgamma.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "kbounds/special.hpp"

namespace kbounds {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 100000;

void require_order(double nu, const char* who) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw DomainError(std::string(who) + ": requires nu > 0");
    }
}

void require_nonnegative_x(double x, const char* who) {
    if (!(x >= 0.0)) throw DomainError(std::string(who) + ": requires x >= 0");
}

void require_unit_order(double nu, double x, const char* who) {
    if (!(nu > 0.0 && nu < 1.0)) {
        throw DomainError(std::string(who) + ": requires nu in (0,1)");
    }
    if (!(x > 0.0)) throw DomainError(std::string(who) + ": requires x > 0");
}

// e^{-x} sum_{j>=0} x^j / (nu (nu+1) ... (nu+j)); all terms positive.
double scaled_gamma_series(double nu, double x) {
    double term = 1.0 / nu;
    double sum = term;
    for (int j = 1; j < kMaxIterations; ++j) {
        term *= x / (nu + j);
        sum += term;
        if (term <= kEps * sum) break;
    }
    return std::exp(-x) * sum;
}

// Continued fraction F with Gamma(nu, x) = e^{-x} x^nu F, modified Lentz.
double upper_gamma_fraction(double nu, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - nu;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double an = -i * (i - nu);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) break;
    }
    return h;
}

// Gamma(nu) / x^nu without intermediate overflow.
double complete_over_power(double nu, double x) {
    if (nu < 170.0) {
        const double p = std::pow(x, nu);
        if (std::isfinite(p) && p > 0.0) return gamma_complete(nu) / p;
    }
    return std::exp(log_gamma(nu) - nu * std::log(x));
}

// Taylor bounds divided by x^nu:
// sum_{j<m} (-1)^j x^j / (j! (nu+j)) + w x^m / (m! (nu+m)), w in {u_m, U_m}.
Enclosure taylor_scaled(double nu, double x, int m) {
    double base = 0.0;
    double power = 1.0;  // (-1)^j x^j / j!
    for (int j = 0; j < m; ++j) {
        base += power / (nu + j);
        power *= -x / (j + 1);
    }
    const double tail = std::fabs(power) / (nu + m);
    const TaylorWeights w = taylor_weights(m, x);
    return Enclosure::checked(base + w.u * tail, base + w.U * tail);
}

Enclosure tail_family(double nu0, double x, int q, TailFamily tail) {
    return tail == TailFamily::pade ? pade_enclosure_gamma(nu0, x, q)
                                    : laurent_enclosure_gamma(nu0, x, q);
}

// Tail-family enclosure at noninteger nu, reduced to its fractional part.
Enclosure reduced_tail(double nu, double x, int q, TailFamily tail) {
    const double whole = std::floor(nu);
    const double nu0 = nu - whole;
    return propagate_upward(tail_family(nu0, x, q, tail), nu0, x, static_cast<int>(whole));
}

Enclosure scale_down(const Enclosure& e, double nu, double x) {
    const double p = std::pow(x, nu);
    return Enclosure::checked(e.lo / p, e.hi / p);
}

}  // namespace

double gamma_elementary(int k, double x) {
    if (k < 1) throw DomainError("gamma_elementary: requires k >= 1");
    require_nonnegative_x(x, "gamma_elementary");
    if (x == 0.0) return 0.0;
    if (x > k) {
        // (k-1)! - e^{-x} sum_{j<k} (k-1)!/j! x^j, the unrolled recursion
        double factorial = 1.0;
        for (int j = 2; j < k; ++j) factorial *= j;
        double poly = 0.0;
        double coef = factorial;  // (k-1)! / j!
        double power = 1.0;
        for (int j = 0; j < k; ++j) {
            poly += coef * power;
            power *= x;
            coef /= (j + 1);
        }
        return factorial - std::exp(-x) * poly;
    }
    // Same closed form written as the tail (k-1)! e^{-x} sum_{j>=k} x^j/j!,
    // which avoids the cancellation for x below k.
    return std::pow(x, k) * scaled_gamma_series(static_cast<double>(k), x);
}

double scaled_gamma(double nu, double x) {
    require_order(nu, "scaled_gamma");
    require_nonnegative_x(x, "scaled_gamma");
    if (x == 0.0) return 1.0 / nu;
    if (std::isinf(x)) return 0.0;
    if (x <= nu + 1.0) return scaled_gamma_series(nu, x);
    return complete_over_power(nu, x) - std::exp(-x) * upper_gamma_fraction(nu, x);
}

double lower_gamma(double nu, double x) {
    require_order(nu, "lower_gamma");
    require_nonnegative_x(x, "lower_gamma");
    if (x == 0.0) return 0.0;
    if (x <= nu + 1.0) return std::pow(x, nu) * scaled_gamma_series(nu, x);
    const double upper = std::exp(nu * std::log(x) - x) * upper_gamma_fraction(nu, x);
    return gamma_complete(nu) - upper;
}

Enclosure taylor_enclosure_gamma(double nu, double x, int m) {
    require_order(nu, "taylor_enclosure_gamma");
    require_nonnegative_x(x, "taylor_enclosure_gamma");
    if (m < 1) throw DomainError("taylor_enclosure_gamma: requires m >= 1");
    if (x == 0.0) return Enclosure::exact(0.0);
    const Enclosure s = taylor_scaled(nu, x, m);
    const double p = std::pow(x, nu);
    return Enclosure::checked(s.lo * p, s.hi * p);
}

LaurentFactors laurent_factors(double nu, double x, int q) {
    if (q < 0) throw DomainError("laurent_factors: requires q >= 0");
    double sum = 0.0;
    double ff = 1.0;  // <nu-1>_k
    double inv_power = 1.0;
    for (int k = 0; k < q; ++k) {
        sum += ff * inv_power;
        ff *= (nu - 1.0) - k;
        inv_power /= x;
    }
    // ff is now <nu-1>_q
    return {sum + negative_part(ff) * inv_power, sum + positive_part(ff) * inv_power};
}

Enclosure laurent_enclosure_gamma(double nu, double x, int q) {
    require_unit_order(nu, x, "laurent_enclosure_gamma");
    const LaurentFactors f = laurent_factors(nu, x, q);
    const double g = gamma_complete(nu);
    const double weight = std::pow(x, nu - 1.0) * std::exp(-x);
    return Enclosure::checked(g - weight * f.upper, g - weight * f.lower);
}

PadeFactors pade_factors(double nu, double x, int q) {
    switch (q) {
        case 0:
            return {0.0, 1.0};
        case 1:
            return {x / (x + 1.0 - nu), (x + 1.0) / (x + 2.0 - nu)};
        case 2: {
            const double lower = x * (x + 3.0 - nu) /
                                 (x * x + 2.0 * (2.0 - nu) * x + (1.0 - nu) * (2.0 - nu));
            const double upper = (x * x + (5.0 - nu) * x + 2.0) /
                                 (x * x + 2.0 * (3.0 - nu) * x + (2.0 - nu) * (3.0 - nu));
            return {lower, upper};
        }
        default:
            throw UnsupportedOrder("pade_factors: closed forms exist only for q in {0,1,2}, got " +
                                   std::to_string(q));
    }
}

Enclosure pade_enclosure_gamma(double nu, double x, int q) {
    const PadeFactors f = pade_factors(nu, x, q);
    require_unit_order(nu, x, "pade_enclosure_gamma");
    const double g = gamma_complete(nu);
    const double weight = std::pow(x, nu - 1.0) * std::exp(-x);
    return Enclosure::checked(g - weight * f.upper, g - weight * f.lower);
}

Enclosure propagate_upward(Enclosure at_nu, double nu, double x, int steps) {
    if (steps < 0) throw DomainError("propagate_upward: requires steps >= 0");
    if (!(nu > 0.0)) throw DomainError("propagate_upward: requires nu > 0");
    Enclosure e = at_nu;
    for (int s = 0; s < steps; ++s) {
        const double order = nu + s;
        const double shift = std::pow(x, order) * std::exp(-x);
        e = Enclosure::checked(order * e.lo - shift, order * e.hi - shift);
    }
    return e;
}

Enclosure matched_enclosure_gamma(double nu, double x, int m, int q, TailFamily tail) {
    require_order(nu, "matched_enclosure_gamma");
    require_nonnegative_x(x, "matched_enclosure_gamma");
    if (tail == TailFamily::pade && q > 2) {
        throw UnsupportedOrder("matched_enclosure_gamma: Pade order must be <= 2");
    }
    if (is_integer(nu) && nu < 171.0) {
        return Enclosure::exact(gamma_elementary(static_cast<int>(nu), x));
    }
    const Enclosure taylor = taylor_enclosure_gamma(nu, x, m);
    if (x == 0.0) return taylor;
    return intersect(taylor, reduced_tail(nu, x, q, tail));
}

Enclosure enclose_gamma(double nu, double x, const GammaEnclosureMethod& how) {
    require_order(nu, "enclose_gamma");
    require_nonnegative_x(x, "enclose_gamma");
    const bool integral = is_integer(nu) && nu < 171.0;
    return std::visit(
        [&](const auto& h) -> Enclosure {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, method::Elementary>) {
                if (!integral) throw DomainError("enclose_gamma: elementary form needs integer nu");
                return Enclosure::exact(gamma_elementary(static_cast<int>(nu), x));
            } else if constexpr (std::is_same_v<T, method::Taylor>) {
                return taylor_enclosure_gamma(nu, x, h.m);
            } else if constexpr (std::is_same_v<T, method::Matched>) {
                return matched_enclosure_gamma(nu, x, h.m, h.q, h.tail);
            } else {
                constexpr TailFamily family =
                    std::is_same_v<T, method::Pade> ? TailFamily::pade : TailFamily::laurent;
                if (integral) return Enclosure::exact(gamma_elementary(static_cast<int>(nu), x));
                return reduced_tail(nu, x, h.q, family);
            }
        },
        how);
}

Enclosure enclose_scaled_gamma(double nu, double x, const GammaEnclosureMethod& how) {
    require_order(nu, "enclose_scaled_gamma");
    require_nonnegative_x(x, "enclose_scaled_gamma");
    if (x == 0.0) return Enclosure::exact(1.0 / nu);
    const bool integral = is_integer(nu) && nu < 171.0;
    return std::visit(
        [&](const auto& h) -> Enclosure {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, method::Elementary>) {
                if (!integral) throw DomainError("enclose_scaled_gamma: elementary form needs integer nu");
                return Enclosure::exact(scaled_gamma(nu, x));
            } else if constexpr (std::is_same_v<T, method::Taylor>) {
                return taylor_scaled(nu, x, h.m);
            } else if constexpr (std::is_same_v<T, method::Matched>) {
                if (h.tail == TailFamily::pade && h.q > 2) {
                    throw UnsupportedOrder("enclose_scaled_gamma: Pade order must be <= 2");
                }
                if (integral) return Enclosure::exact(scaled_gamma(nu, x));
                const Enclosure taylor = taylor_scaled(nu, x, h.m);
                const double p = std::pow(x, nu);
                if (!(p > 0.0) || !std::isfinite(p)) return taylor;
                return intersect(taylor, scale_down(reduced_tail(nu, x, h.q, h.tail), nu, x));
            } else {
                constexpr TailFamily family =
                    std::is_same_v<T, method::Pade> ? TailFamily::pade : TailFamily::laurent;
                if (integral) return Enclosure::exact(scaled_gamma(nu, x));
                return scale_down(reduced_tail(nu, x, h.q, family), nu, x);
            }
        },
        how);
}

}  // namespace kbounds
