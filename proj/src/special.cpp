#include "kbounds/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kbounds/enclosure.hpp"

namespace kbounds {

namespace {

// Lanczos approximation with 13 terms, g = 6.0246800407767295837..., in the
// rational form sum(num[i] z^i) / sum(den[i] z^i); den is z(z+1)...(z+11).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

constexpr std::array<double, 13> kLanczosDen = {
    0.0,         39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0,  13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,      66.0,       1.0,
};

double lanczos_sum(double z) {
    // Evaluate in 1/z for large z so the leading coefficients dominate.
    double num = 0.0;
    double den = 0.0;
    if (z <= 1.0) {
        for (std::size_t i = kLanczosNum.size(); i-- > 0;) {
            num = num * z + kLanczosNum[i];
            den = den * z + kLanczosDen[i];
        }
    } else {
        const double w = 1.0 / z;
        for (std::size_t i = 0; i < kLanczosNum.size(); ++i) {
            num = num * w + kLanczosNum[i];
            den = den * w + kLanczosDen[i];
        }
    }
    return num / den;
}

// Gamma for z >= 1.
double gamma_lanczos(double z) {
    if (z > 171.7) return std::numeric_limits<double>::infinity();
    const double zgh = z + kLanczosG - 0.5;
    double result = lanczos_sum(z);
    if (z > 100.0) {
        // Split the power so the intermediate does not overflow.
        const double hp = std::pow(zgh, z / 2.0 - 0.25);
        result *= hp / std::exp(zgh);
        result *= hp;
    } else {
        result *= std::pow(zgh, z - 0.5) / std::exp(zgh);
    }
    return result;
}

// sin(pi z) with argument reduction to the nearest integer.
double sin_pi(double z) {
    const double n = std::nearbyint(z);
    const double f = z - n;
    const double s = std::sin(std::numbers::pi * f);
    return std::fmod(std::fabs(n), 2.0) == 1.0 ? -s : s;
}

}  // namespace

bool is_integer(double nu) { return std::isfinite(nu) && std::floor(nu) == nu; }

double gamma_complete(double nu) {
    if (std::isnan(nu)) return nu;
    if (nu <= 0.0 && is_integer(nu)) {
        throw PoleError("gamma_complete: pole at nu = " + std::to_string(nu));
    }
    if (nu >= 1.0) return gamma_lanczos(nu);
    if (nu > -20.0) {
        // Gamma(nu) = Gamma(nu + k) / (nu (nu+1) ... (nu+k-1)), nu + k in [1, 2).
        double denom = 1.0;
        double z = nu;
        while (z < 1.0) {
            denom *= z;
            z += 1.0;
        }
        return gamma_lanczos(z) / denom;
    }
    // Reflection: Gamma(nu) Gamma(1-nu) = pi / sin(pi nu).
    const double g = gamma_lanczos(1.0 - nu);
    return std::numbers::pi / (sin_pi(nu) * g);
}

double log_gamma(double nu) {
    if (!(nu > 0.0)) throw DomainError("log_gamma: requires nu > 0");
    if (nu < 100.0) return std::log(gamma_complete(nu));
    const double zgh = nu + kLanczosG - 0.5;
    return std::log(lanczos_sum(nu)) + (nu - 0.5) * std::log(zgh) - zgh;
}

double pochhammer(double a, int k) {
    if (k < 0) throw DomainError("pochhammer: k must be nonnegative");
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

Sign pochhammer_sign(double delta, int k) {
    if (!(delta > -1.0)) throw DomainError("pochhammer_sign: requires delta > -1");
    if (k < 0) throw DomainError("pochhammer_sign: k must be nonnegative");
    if (delta < 0.0) return Sign::positive;
    const double whole = std::floor(delta);
    const auto alternating = [](long long e) {
        return e % 2 == 0 ? Sign::positive : Sign::negative;
    };
    if (k <= whole) return alternating(k);
    if (whole == delta) return Sign::zero;
    return alternating(static_cast<long long>(whole) + 1);
}

double falling_factorial(double mu, int h) {
    if (h < 0) throw DomainError("falling_factorial: h must be nonnegative");
    double p = 1.0;
    for (int i = 0; i < h; ++i) p *= mu - i;
    return p;
}

double beta(double mu, double nu) {
    if (!(mu > 0.0) || !(nu > 0.0)) throw DomainError("beta: requires mu, nu > 0");
    const double s = mu + nu;
    if (s < 170.0) return gamma_complete(mu) * gamma_complete(nu) / gamma_complete(s);
    return std::exp(log_gamma(mu) + log_gamma(nu) - log_gamma(s));
}

TaylorWeights taylor_weights(int m, double x) {
    if (m < 1) throw DomainError("taylor_weights: requires m >= 1");
    if (!(x >= 0.0)) throw DomainError("taylor_weights: requires x >= 0");
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    const double a = sgn;
    const double b = sgn * std::exp(-x);
    return {std::min(a, b), std::max(a, b)};
}

}  // namespace kbounds
