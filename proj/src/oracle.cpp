#include "kbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace kbounds::oracle {

namespace {

using ld = long double;

constexpr ld kPi = std::numbers::pi_v<ld>;
constexpr ld kLdEps = std::numeric_limits<ld>::epsilon();

__extension__ typedef __float128 wide;
constexpr wide kQuadEps = static_cast<wide>(1.0e-34L) * static_cast<wide>(1.93L);

// Abscissae beyond |t| = 8 sit within e^{-4600} of the endpoints.
constexpr ld kHalfWidth = 8.0L;
constexpr int kMaxLevel = 14;
constexpr int kMinConvergedLevel = 3;

void require_tolerance(double tol) {
    if (!(tol >= 1e-13)) throw DomainError("oracle: tolerance must be >= 1e-13");
}

// Contribution of the symmetric node pair +t, -t (weight excluded from h).
ld node_pair(const UnitIntegrand& f, ld t, std::size_t& evaluations) {
    const ld s = kPi / 2 * std::sinh(t);
    const ld e = std::exp(-2 * s);                 // e^{-2s}, s >= 0
    const ld near_zero = e / (1 + e);              // u at -t, equals 1 - u at +t
    const ld near_one = 1 / (1 + e);
    // du/dt = (pi/4) cosh(t) sech^2(s), sech^2(s) = 4 e^{-2s} / (1 + e^{-2s})^2
    const ld weight = kPi / 4 * std::cosh(t) * 4 * e / ((1 + e) * (1 + e));
    if (weight == 0) return 0;
    evaluations += 2;
    return weight * (f(near_one, near_zero) + f(near_zero, near_one));
}

}  // namespace

QuadratureResult integrate_unit(const UnitIntegrand& f, double tol, int min_level) {
    require_tolerance(tol);
    std::size_t evaluations = 0;

    // Level 0: h = 1, nodes at 0, +-1, ..., +-8.
    ld sum = 0;
    {
        std::size_t evals = 1;
        sum += kPi / 4 * f(0.5L, 0.5L);  // t = 0: u = 1/2, du/dt = pi/4
        for (int k = 1; k <= static_cast<int>(kHalfWidth); ++k) sum += node_pair(f, k, evals);
        evaluations += evals;
    }
    ld h = 1;
    ld previous = h * sum;
    ld current = previous;
    ld difference = std::numeric_limits<ld>::infinity();

    for (int level = 1; level <= kMaxLevel; ++level) {
        h /= 2;
        for (ld t = h; t <= kHalfWidth; t += 2 * h) sum += node_pair(f, t, evaluations);
        current = h * sum;
        difference = std::fabs(current - previous);
        previous = current;
        if (level < std::max(kMinConvergedLevel, min_level)) continue;
        if (difference <= tol * std::fabs(current) || current == 0) {
            return {static_cast<double>(current), static_cast<double>(difference), evaluations};
        }
    }
    const QuadratureResult best{static_cast<double>(current), static_cast<double>(difference),
                                evaluations};
    throw ToleranceNotMet("integrate_unit: tolerance not met", best);
}

QuadratureResult n_reference(const KummerParams& p, double x, double tol, int min_level) {
    if (!(x >= 0.0)) throw DomainError("n_reference: requires x >= 0");
    const ld a1 = static_cast<ld>(p.alpha()) - 1;
    const ld d = p.delta();
    const ld xl = x;
    const auto integrand = [=](ld t, ld one_minus_t) {
        return std::pow(t, a1) * std::pow(one_minus_t, d) * std::exp(-xl * t);
    };
    return integrate_unit(integrand, tol, min_level);
}

long double gamma_by_series(double nu, double x, double tol, long double* tail_bound) {
    // The terms peak near j = x before cancelling down to a sum of size
    // about e^{-x}/nu, so they are accumulated in quad precision.
    const wide v = nu;
    const wide xw = x;
    wide power = 1;  // x^j / j!
    wide sum = 0;
    wide largest = 0;
    wide next = 0;
    int j = 0;
    for (; j < 100000; ++j) {
        const wide term = power / (v + j);
        sum += (j % 2 == 0) ? term : -term;
        if (term > largest) largest = term;
        power *= xw / (j + 1);
        next = power / (v + j + 1);
        const wide magnitude = sum < 0 ? -sum : sum;
        // Once j + 1 > x the terms decrease, so the first omitted term bounds the tail.
        if (j + 1 > xw && next <= static_cast<wide>(tol) * static_cast<wide>(1e-3) * magnitude) break;
    }
    const ld scale = std::pow(static_cast<ld>(x), static_cast<ld>(nu));
    const wide rounding = kQuadEps * largest * (j + 1);
    if (tail_bound) {
        *tail_bound = scale * static_cast<ld>(next + 4 * rounding) +
                      4 * kLdEps * std::fabs(scale * static_cast<ld>(sum));
    }
    return scale * static_cast<ld>(sum);
}

long double gamma_by_continued_fraction(double nu, double x, double /*tol*/) {
    const ld v = nu;
    const ld xl = x;
    constexpr ld tiny = 1e-4000L;
    ld b = xl + 1 - v;
    ld c = 1 / tiny;
    ld d = 1 / b;
    ld h = d;
    for (int i = 1; i < 100000; ++i) {
        const ld an = -static_cast<ld>(i) * (i - v);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1 / d;
        const ld del = d * c;
        h *= del;
        if (std::fabs(del - 1) <= kLdEps) break;
    }
    const ld upper = std::exp(v * std::log(xl) - xl) * h;
    return std::tgamma(v) - upper;
}

QuadratureResult gamma_reference(double nu, double x, double tol) {
    require_tolerance(tol);
    if (!(nu > 0.0)) throw DomainError("gamma_reference: requires nu > 0");
    if (!(x >= 0.0)) throw DomainError("gamma_reference: requires x >= 0");
    if (x == 0.0) return {0.0, 0.0, 0};
    QuadratureResult out;
    if (x <= nu + 1.0) {
        ld tail = 0;
        const ld v = gamma_by_series(nu, x, tol, &tail);
        out = {static_cast<double>(v), static_cast<double>(tail), 0};
        if (!(out.est_error <= tol * std::fabs(out.value))) {
            // Large orders cancel beyond quad precision; integrate
            // x^nu int_0^1 t^{nu-1} e^{-x t} dt instead.
            const ld nu1 = static_cast<ld>(nu) - 1;
            const ld xl = x;
            const QuadratureResult q = integrate_unit(
                [=](ld t, ld) { return std::pow(t, nu1) * std::exp(-xl * t); }, tol);
            const ld scale = std::pow(xl, static_cast<ld>(nu));
            out = {static_cast<double>(scale * q.value), static_cast<double>(scale * q.est_error),
                   q.evaluations};
        }
    } else {
        const ld v = gamma_by_continued_fraction(nu, x, tol);
        const ld g = std::tgamma(static_cast<ld>(nu));
        out = {static_cast<double>(v), static_cast<double>(16 * kLdEps * g), 0};
    }
    if (!(out.est_error <= tol * std::fabs(out.value))) {
        throw ToleranceNotMet("gamma_reference: tolerance not met", out);
    }
    return out;
}

}  // namespace kbounds::oracle
