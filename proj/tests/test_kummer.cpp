#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "kbounds/kummer.hpp"
#include "kbounds/oracle.hpp"
#include "kbounds/special.hpp"

using namespace kbounds;

namespace {

double oracle_N(const KummerParams& p, double x) { return oracle::n_reference(p, x).value; }

bool same(double a, double b, double rel = 1e-14) { return std::fabs(a - b) <= rel * std::fabs(b); }

// The fully elementary lower and upper bounds printed for alpha = 1/2, delta = 3/2.
double printed_p(double x) {
    const double rpi = std::sqrt(std::numbers::pi);
    const double s = std::sqrt(x);
    return rpi / s - 3 * rpi / (4 * x * s) + 9 * rpi / (32 * x * x * s) +
           (9 / (8 * x) - 2 / (3 + 2 * x) + 3 / (2 * x * (1 + 2 * x)) - 2 / (x * (3 + 2 * x)) -
            9 / (16 * x * x) - 9 / (16 * x * x * (3 + 2 * x)) - 9 / (16 * x * x * x * (3 + 2 * x))) *
               std::exp(-x);
}

double printed_P(double x) {
    const double rpi = std::sqrt(std::numbers::pi);
    const double s = std::sqrt(x);
    return rpi / s - 3 * rpi / (4 * x * s) + 3 * rpi / (8 * x * x * s) +
           (1 / x - 2 / (1 + 2 * x) - 3 / (4 * x * x) + 3 / (2 * x * (3 + 2 * x)) -
            3 / (4 * x * x * (1 + 2 * x)) + 3 / (2 * x * x * (3 + 2 * x))) *
               std::exp(-x);
}

}  // namespace

TEST_CASE("partial sum examples") {
    const KummerParams poly(2.0, 2.0);
    for (double x = 0.0; x <= 10.0; x += 0.5) {
        CHECK(std::fabs(gamma_partial_sum(poly, 3, x) - oracle_N(poly, x)) <= 1e-10);
    }
    CHECK(gamma_partial_sum(KummerParams(3.5, 0.7), 1, 0.0) == 1.0 / 3.5);
    const KummerParams p(2.0, 1.5);
    // r_2 > 0 here, so the bare partial sum sits below g; its error is what the bounds pin down.
    CHECK(gamma_partial_sum(p, 2, 1.0) < expansion_enclosure(p, 2, 1.0).lo);
    const ErrorEstimate e = error_bounds(p, 2, 1.0);
    const double eps = oracle_N(p, 1.0) - gamma_partial_sum(p, 2, 1.0);
    CHECK(e.e <= eps);
    CHECK(eps <= e.E);
}

TEST_CASE("expansion enclosures at x = 0") {
    const Enclosure i = expansion_enclosure(KummerParams(2.0, 1.5), 2, 0.0);
    CHECK(same(i.lo, 3.0 / 32.0));
    CHECK(same(i.hi, 1.0 / 8.0));
    const Enclosure iii = expansion_enclosure(KummerParams(2.0, -0.5), 4, 0.0);
    CHECK(same(iii.lo, 667.0 / 768.0));
    CHECK(same(iii.hi, 1087.0 / 768.0));
    const Enclosure ii = expansion_enclosure(KummerParams(0.5, 1.5), 2, 0.0);
    CHECK(same(ii.lo, 23.0 / 20.0));
    CHECK(same(ii.hi, 6.0 / 5.0));
}

TEST_CASE("taylor enclosure of N") {
    const KummerParams p(2.0, 1.5);
    const Enclosure at0 = taylor_enclosure_N(p, 3, 0.0);
    CHECK(at0.lo == at0.hi);
    CHECK(same(at0.lo, 4.0 / 35.0, 1e-13));

    const std::vector<double> c = taylor_coefficients_N(p, 4);
    const std::vector<double> want{4.0 / 35, -16.0 / 315, 16.0 / 1155, -128.0 / 45045, 64.0 / 135135};
    REQUIRE(c.size() == want.size());
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(same(c[k], want[k], 1e-13));

    const std::vector<double> d = taylor_coefficients_N(KummerParams(2.0, -0.5), 4);
    const std::vector<double> want_d{4.0 / 3, -16.0 / 15, 16.0 / 35, -128.0 / 945, 64.0 / 2079};
    for (std::size_t k = 0; k < d.size(); ++k) CHECK(same(d[k], want_d[k], 1e-13));

    const std::vector<double> h = taylor_coefficients_N(KummerParams(0.5, 1.5), 4);
    const double pi = std::numbers::pi;
    const std::vector<double> want_h{3 * pi / 8, -pi / 16, 3 * pi / 256, -pi / 512, 7 * pi / 24576};
    for (std::size_t k = 0; k < h.size(); ++k) CHECK(same(h[k], want_h[k], 1e-13));
}

TEST_CASE("matched enclosure at x = 0 keeps the narrower side") {
    for (double d : {-0.5, 0.7, 1.5, 3.0}) {
        const KummerParams p(1.5, d);
        const Enclosure m = matched_enclosure_N(p, 2, 4, 0.0);
        CHECK(m.width() ==
              std::min(expansion_enclosure(p, 2, 0.0).width(), taylor_enclosure_N(p, 4, 0.0).width()));
    }
}

TEST_CASE("matched enclosure contains the oracle and is no wider than either side") {
    for (double a : {0.5, 2.0}) {
        for (double d : {-0.5, 0.0, 1.5, 2.0}) {
            const KummerParams p(a, d);
            for (double x = 0.0; x <= 10.0; x += 0.25) {
                CAPTURE(a);
                CAPTURE(d);
                CAPTURE(x);
                const double N = oracle_N(p, x);
                const Enclosure m = matched_enclosure_N(p, 3, 4, x);
                CHECK(m.contains(N, 1e-9 * std::max(1.0, N)));
                CHECK(m.width() <= expansion_enclosure(p, 3, x).width());
                CHECK(m.width() <= taylor_enclosure_N(p, 4, x).width());
            }
        }
    }
}

TEST_CASE("elementary enclosure reproduces the printed elementary bounds") {
    const KummerParams p(0.5, 1.5);
    for (double x : {0.5, 1.0, 2.4, 5.0, 12.0}) {
        CAPTURE(x);
        const Enclosure e = elementary_enclosure_N(p, 2, method::Pade{1}, x);
        CHECK(same(e.lo, printed_p(x), 1e-12));
        CHECK(same(e.hi, printed_P(x), 1e-12));
    }
}

TEST_CASE("elementary enclosure brackets the Gamma enclosure") {
    const KummerParams p(0.5, 1.5);
    for (int i = 50; i <= 2000; ++i) {
        const double x = 0.01 * i;
        const Enclosure g = expansion_enclosure(p, 2, x);
        for (const Enclosure& e : {elementary_enclosure_N(p, 2, 4, 1, x),
                                   elementary_enclosure_N(p, 2, method::Pade{1}, x)}) {
            CAPTURE(x);
            CHECK(e.lo <= g.lo);
            CHECK(g.hi <= e.hi);
        }
    }
}

TEST_CASE("elementary enclosure with integer alpha is the Gamma enclosure") {
    for (double d : {-0.5, 1.5, 2.0}) {
        const KummerParams p(2.0, d);
        for (double x : {0.1, 1.0, 7.0}) {
            const Enclosure a = elementary_enclosure_N(p, 3, 4, 1, x);
            const Enclosure b = expansion_enclosure(p, 3, x);
            CHECK(a.lo == b.lo);
            CHECK(a.hi == b.hi);
        }
    }
    CHECK_THROWS_AS(elementary_enclosure_N(KummerParams(0.5, 1.5), 2, 4, 1, 0.0), DomainError);
}

TEST_CASE("elementary enclosures contain the oracle") {
    for (double a : {0.3, 0.5, 1.7}) {
        for (double d : {-0.7, 0.4, 2.5}) {
            const KummerParams p(a, d);
            for (double x = 0.25; x <= 15.0; x += 0.25) {
                const double N = oracle_N(p, x);
                CAPTURE(a);
                CAPTURE(d);
                CAPTURE(x);
                CHECK(elementary_enclosure_N(p, 3, 4, 1, x).contains(N, 1e-9 * std::max(1.0, N)));
                CHECK(elementary_enclosure_N(p, 3, method::Laurent{2}, x)
                          .contains(N, 1e-9 * std::max(1.0, N)));
            }
        }
    }
}

TEST_CASE("error bounds") {
    const ErrorEstimate at0 = error_bounds(KummerParams(2.0, 1.5), 2, 0.0);
    CHECK(same(at0.e, 3.0 / 32.0));
    const ErrorEstimate poly = error_bounds(KummerParams(2.0, 3.0), 4, 1.3);
    CHECK(poly.e == 0.0);
    CHECK(poly.E == 0.0);
    CHECK(poly.calE == 0.0);
    const int n = 10000;
    const double x = 1.0;
    const double d = 1.5;
    const double calE = error_bounds(KummerParams(2.0, d), n, x).calE;
    const double scaled = calE * std::pow(n, 1.0 + d) * std::exp(x) * std::fabs(d * std::tgamma(-d));
    CHECK(std::fabs(scaled - 1.0) < 0.1);
}

TEST_CASE("relative uncertainty") {
    CHECK(same(relative_uncertainty(KummerParams(2.0, 1.5), 2, 0.0), 1.0 / 7.0));
    CHECK(same(relative_uncertainty(KummerParams(2.0, -0.5), 4, 0.0), 210.0 / 877.0));
    const Enclosure e = expansion_enclosure(KummerParams(10.0, 10.0), 1, 0.0);
    CHECK(e.lo + e.hi < 0.0);
    const double xi = relative_uncertainty(KummerParams(10.0, 10.0), 1, 0.0);
    CHECK(std::isfinite(xi));
    CHECK(xi > 0.0);
}

TEST_CASE("xi is nonincreasing for the first example") {
    const KummerParams p(2.0, 1.5);
    double previous = relative_uncertainty(p, 2, 0.0);
    for (int i = 1; i <= 100; ++i) {
        const double v = relative_uncertainty(p, 2, 0.1 * i);
        CHECK(v <= previous);
        previous = v;
    }
}

TEST_CASE("sup-norm bound") {
    const KummerParams p(2.0, 1.5);
    CHECK(same(sup_norm_error_bound(p, 0.0, 3), bound_coefficients(2.0, 1.5, 3).X / 5.0));
    CHECK(sup_norm_error_bound(KummerParams(1.0, 2.0), 0.5, 3) == 0.0);
    CHECK_THROWS_AS(sup_norm_error_bound(p, 2.5, 3), DomainError);
    CHECK_THROWS_AS(sup_norm_error_bound(p, -0.1, 3), DomainError);
}

TEST_CASE("sup-norm bound dominates the sampled sup") {
    struct Case {
        double a, d, sigma;
        int n;
    };
    const std::vector<Case> cases{{2, 1.5, 1, 3},    {2, 1.5, 0, 1},     {2, 1.5, 2, 2},
                                  {0.5, 1.5, 0.5, 2}, {3, 7.5, 1.5, 4},   {2, -0.5, 1, 4},
                                  {1, -0.9, 0.3, 1},  {10, 3.3, 5, 6},    {0.7, 0.2, 0.7, 5},
                                  {4, 10, 4, 8},      {1.5, -0.3, 0, 13}, {5, 2.5, 2.5, 3}};
    for (const Case& c : cases) {
        const KummerParams p(c.a, c.d);
        const double bound = sup_norm_error_bound(p, c.sigma, c.n);
        double sup = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double x = 0.1 * i;
            const double eps = oracle_N(p, x) - gamma_partial_sum(p, c.n, x);
            sup = std::max(sup, std::pow(x, c.sigma) * std::fabs(eps));
        }
        CAPTURE(c.a);
        CAPTURE(c.d);
        CAPTURE(c.sigma);
        CAPTURE(c.n);
        CHECK(sup <= bound * (1 + 1e-9) + 1e-15);
    }
}

TEST_CASE("sup-norm bound decays at the predicted rate") {
    for (double d : {-0.5, 1.5}) {
        const KummerParams p(2.0, d);
        const double ratio = sup_norm_error_bound(p, 1.0, 1024) / sup_norm_error_bound(p, 1.0, 512);
        CHECK(std::fabs(ratio / std::pow(2.0, -(1.0 + d)) - 1.0) < 0.1);
    }
}

TEST_CASE("standard M enclosure") {
    for (double a : {0.5, 1.0, 2.0}) {
        for (double b : {2.5, 4.0}) {
            CHECK(standard_M_enclosure(StandardParams(a, b), 0.0, 3, 4).contains(1.0, 1e-13));
        }
    }
    const StandardParams s(1.0, 2.0);
    for (double x = -10.0; x <= 10.0; x += 0.5) {
        const double want = x == 0.0 ? 1.0 : std::expm1(x) / x;
        CAPTURE(x);
        CHECK(standard_M_enclosure(s, x, 3, 4).contains(want, 1e-12 * std::max(1.0, want)));
    }
    const StandardParams t(1.5, 3.2);
    const double norm = 1.0 / beta(1.5, 1.7);
    const Enclosure neg = matched_enclosure_N(t.negative_branch(), 3, 4, 0.0);
    const Enclosure pos = matched_enclosure_N(t.positive_branch(), 3, 4, 0.0);
    const double slack = (neg.width() + pos.width()) * norm + 1e-13;
    CHECK(std::fabs(neg.midpoint() - pos.midpoint()) * norm <= slack);
    CHECK_THROWS_AS(StandardParams(2.0, 2.0), DomainError);
    CHECK_THROWS_AS(StandardParams(0.0, 2.0), DomainError);
}

TEST_CASE("beta enclosure") {
    const Enclosure i = beta_enclosure(KummerParams(2.0, 1.5), 2);
    CHECK(same(i.lo, 3.0 / 32.0));
    CHECK(same(i.hi, 1.0 / 8.0));
    CHECK(i.contains(4.0 / 35.0));
    const Enclosure exact = beta_enclosure(KummerParams(1.5, 2.0), 3);
    CHECK(exact.width() == 0.0);
    CHECK(same(exact.lo, beta(1.5, 3.0), 1e-13));
    for (double d : {-0.5, 1.5}) {
        const KummerParams p(2.0, d);
        const double ratio = beta_enclosure(p, 512).width() / beta_enclosure(p, 256).width();
        CAPTURE(d);
        CHECK(std::fabs(ratio / std::pow(2.0, -(1.0 + d)) - 1.0) < 0.1);
    }
}

TEST_CASE("watson bound equality for pure powers") {
    for (double lambda : {0.0, 0.5, 2.0}) {
        for (double x : {0.5, 2.0}) {
            const PowerTerm term{1.0, lambda};
            const double want = oracle_N(KummerParams(lambda + 1.0, 0.0), x);
            CAPTURE(lambda);
            CAPTURE(x);
            CHECK(std::fabs(watson_bound({&term, 1}, 1.0, x) - want) <= 1e-10);
        }
    }
    const PowerTerm half{2.0, 0.5};
    CHECK(watson_bound({&half, 1}, 1.0, 0.0) == doctest::Approx(2.0 / 1.5));
    CHECK(watson_bound({&half, 1}, INFINITY, 2.0) ==
          doctest::Approx(2.0 * std::tgamma(1.5) / std::pow(2.0, 1.5)));
}

TEST_CASE("watson bound brackets a Kummer integrand") {
    // 1 - t <= (1-t)^{1/2} <= 1 - t/2 on (0,1), weighted by t^{1/2}.
    const KummerParams p(1.5, 0.5);
    const std::vector<PowerTerm> lower{{1.0, 0.5}, {-1.0, 1.5}};
    const std::vector<PowerTerm> upper{{1.0, 0.5}, {-0.5, 1.5}};
    for (double x : {0.0, 0.5, 3.0, 10.0}) {
        const double N = oracle_N(p, x);
        CHECK(watson_bound(lower, 1.0, x) <= N);
        CHECK(N <= watson_bound(upper, 1.0, x));
    }
}
