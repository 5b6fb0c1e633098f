#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kbounds/enclosure.hpp"
#include "kbounds/special.hpp"

using namespace kbounds;

namespace {

bool close(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::fabs(b); }

}  // namespace

TEST_CASE("gamma_complete at known points") {
    const double rpi = std::sqrt(std::numbers::pi);
    CHECK(gamma_complete(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(close(gamma_complete(0.5), 1.7724538509055160, 1e-13));
    CHECK(close(gamma_complete(4.5), 105.0 / 16.0 * rpi, 1e-13));
    CHECK(close(gamma_complete(-0.5), -2.0 * rpi, 1e-13));
    CHECK(close(gamma_complete(-1.5), 4.0 / 3.0 * rpi, 1e-13));
    CHECK(close(gamma_complete(10.0), 362880.0, 1e-13));
    CHECK(close(gamma_complete(150.5), std::tgamma(150.5), 1e-12));
}

TEST_CASE("gamma_complete agrees with the C library") {
    for (double v = 0.05; v < 60.0; v += 0.137) {
        CAPTURE(v);
        CHECK(close(gamma_complete(v), static_cast<double>(std::tgamma(static_cast<long double>(v))),
                    1e-13));
    }
}

TEST_CASE("gamma_complete rejects the poles") {
    CHECK_THROWS_AS(gamma_complete(0.0), PoleError);
    CHECK_THROWS_AS(gamma_complete(-3.0), PoleError);
    CHECK_THROWS_AS(gamma_complete(-3.0), DomainError);
}

TEST_CASE("gamma recursion") {
    for (double v = 0.1; v < 30.0; v += 0.0731) {
        CAPTURE(v);
        const double lhs = gamma_complete(v + 1.0);
        CHECK(std::fabs(lhs - v * gamma_complete(v)) <= 1e-12 * lhs);
    }
}

TEST_CASE("pochhammer examples") {
    CHECK(pochhammer(3.7, 0) == 1.0);
    CHECK(pochhammer(-1.5, 2) == 0.75);
    CHECK(pochhammer(-2.0, 3) == 0.0);
    CHECK(pochhammer(1.0, 5) == 120.0);
}

TEST_CASE("pochhammer identities") {
    for (double a = -5.0; a <= 5.0; a += 0.25) {
        for (int k = 0; k < 20; ++k) {
            CAPTURE(a);
            CAPTURE(k);
            const double next = pochhammer(a, k + 1);
            const double tol = 4 * std::numeric_limits<double>::epsilon() * std::fabs(next);
            CHECK(std::fabs(next - pochhammer(a, k) * (a + k)) <= tol);
            CHECK(std::fabs(next - a * pochhammer(a + 1.0, k)) <= tol);
        }
        for (int m = 0; m <= 30; ++m) {
            double sum = 0.0;
            double term = 1.0;  // (a)_k / k!
            double scale = 0.0;
            for (int k = 0; k <= m; ++k) {
                sum += term;
                scale = std::max(scale, std::fabs(term));
                term *= (a + k) / (k + 1);
            }
            const double rhs = pochhammer(a + 1.0, m) / std::tgamma(m + 1.0);
            CAPTURE(a);
            CAPTURE(m);
            CHECK(std::fabs(sum - rhs) <= 1e-12 * std::max(std::fabs(rhs), scale));
        }
    }
}

TEST_CASE("pochhammer as a Gamma ratio") {
    for (double a = 0.1; a <= 10.0; a += 0.3) {
        for (int k = 0; k <= 20; ++k) {
            CAPTURE(a);
            CAPTURE(k);
            const double ratio = gamma_complete(a + k) / gamma_complete(a);
            CHECK(close(pochhammer(a, k), ratio, 1e-11));
        }
    }
}

TEST_CASE("pochhammer large-k asymptotics") {
    const int k = 10000;
    for (double a : {0.5, 1.5, 3.0}) {
        // (a)_k Gamma(a) / (k! k^{a-1}) through logs to stay in range.
        double log_ratio = 0.0;
        for (int j = 0; j < k; ++j) log_ratio += std::log((a + j) / (j + 1));
        log_ratio += std::log(gamma_complete(a)) - (a - 1.0) * std::log(static_cast<double>(k));
        CAPTURE(a);
        CHECK(std::fabs(std::exp(log_ratio) - 1.0) < 0.02);
    }
}

TEST_CASE("pochhammer_sign examples and tables") {
    CHECK(pochhammer_sign(1.5, 1) == Sign::negative);
    for (int k = 0; k < 10; ++k) CHECK(pochhammer_sign(-0.5, k) == Sign::positive);
    CHECK(pochhammer_sign(2.0, 4) == Sign::zero);
    CHECK_THROWS_AS(pochhammer_sign(-1.0, 2), DomainError);
}

TEST_CASE("pochhammer_sign matches the sign of the product") {
    for (double d = -0.95; d <= 10.0; d += 0.05) {
        for (int k = 0; k <= 50; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            CHECK(pochhammer_sign(d, k) == sign_of(pochhammer(-d, k)));
        }
    }
    for (int d = 0; d <= 10; ++d) {
        for (int k = 0; k <= 50; ++k) CHECK(pochhammer_sign(d, k) == sign_of(pochhammer(-d, k)));
    }
}

TEST_CASE("falling factorial and parts") {
    CHECK(falling_factorial(2.3, 0) == 1.0);
    CHECK(falling_factorial(-0.5, 1) == -0.5);
    CHECK(falling_factorial(-0.5, 2) == 0.75);
    CHECK(falling_factorial(5.0, 3) == 60.0);
    CHECK(positive_part(-2.0) == 0.0);
    CHECK(positive_part(3.0) == 3.0);
    CHECK(negative_part(-2.0) == -2.0);
    CHECK(negative_part(3.0) == 0.0);
}

TEST_CASE("beta") {
    CHECK(close(beta(1.0, 1.0), 1.0, 1e-14));
    CHECK(close(beta(2.0, 2.5), 4.0 / 35.0, 1e-13));
    CHECK(close(beta(0.5, 2.5), 3.0 * std::numbers::pi / 8.0, 1e-13));
    CHECK(close(beta(200.0, 0.5), std::exp(std::lgamma(200.0) + std::lgamma(0.5) - std::lgamma(200.5)),
                1e-11));
    CHECK_THROWS_AS(beta(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(beta(1.0, -1.0), DomainError);
}

TEST_CASE("beta against the Gamma identity on a grid") {
    for (double mu = 0.1; mu < 20.0; mu += 0.7) {
        for (double nu = 0.1; nu < 20.0; nu += 0.9) {
            const long double ref = std::tgamma(static_cast<long double>(mu)) *
                                    std::tgamma(static_cast<long double>(nu)) /
                                    std::tgamma(static_cast<long double>(mu) + nu);
            CAPTURE(mu);
            CAPTURE(nu);
            CHECK(close(beta(mu, nu), static_cast<double>(ref), 1e-12));
        }
    }
}

TEST_CASE("taylor weights") {
    const TaylorWeights even = taylor_weights(2, 1.0);
    CHECK(even.u == doctest::Approx(std::exp(-1.0)));
    CHECK(even.U == 1.0);
    const TaylorWeights at0 = taylor_weights(1, 0.0);
    CHECK(at0.u == -1.0);
    CHECK(at0.U == -1.0);
    const TaylorWeights odd = taylor_weights(1, 2.0);
    CHECK(odd.u == -1.0);
    CHECK(odd.U == doctest::Approx(-std::exp(-2.0)));
}

TEST_CASE("taylor weights sandwich every intermediate exponential") {
    for (int m = 1; m <= 6; ++m) {
        for (double x = 0.0; x <= 10.0; x += 0.5) {
            const TaylorWeights w = taylor_weights(m, x);
            CHECK(w.u <= w.U);
            for (double c = 0.0; c <= x; c += 0.125) {
                const double v = (m % 2 == 0 ? 1.0 : -1.0) * std::exp(-c);
                CHECK(w.u <= v);
                CHECK(v <= w.U);
            }
        }
    }
}

TEST_CASE("enclosure collapse policy") {
    const Enclosure tiny = Enclosure::checked(1.0 + 2e-16, 1.0);
    CHECK(tiny.lo == tiny.hi);
    CHECK_THROWS_AS(Enclosure::checked(1.0 + 1e-12, 1.0), EnclosureCollapse);
    CHECK_THROWS_AS(Enclosure::checked(std::nan(""), 1.0), EnclosureCollapse);
    const Enclosure i = intersect({0.0, 2.0}, {1.0, 3.0});
    CHECK(i.lo == 1.0);
    CHECK(i.hi == 2.0);
    CHECK(relative_uncertainty(Enclosure{-3.0, 1.0}) == 2.0);
    CHECK(std::isinf(relative_uncertainty(Enclosure{-1.0, 1.0})));
    CHECK(relative_uncertainty(Enclosure::exact(0.0)) == 0.0);
}
