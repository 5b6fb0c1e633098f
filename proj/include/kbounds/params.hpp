#pragma once

#include <cmath>
#include <string>

#include "kbounds/enclosure.hpp"

namespace kbounds {

/// Parameters of N(alpha, delta, x) = int_0^1 t^{alpha-1} (1-t)^delta e^{-x t} dt.
class KummerParams {
public:
    /// Throws DomainError unless alpha > 0 and delta > -1.
    KummerParams(double alpha, double delta) : alpha_(alpha), delta_(delta) {
        if (!(alpha > 0.0) || !std::isfinite(alpha)) {
            throw DomainError("KummerParams: requires alpha > 0, got " + std::to_string(alpha));
        }
        if (!(delta > -1.0) || !std::isfinite(delta)) {
            throw DomainError("KummerParams: requires delta > -1, got " + std::to_string(delta));
        }
    }

    double alpha() const { return alpha_; }
    double delta() const { return delta_; }

private:
    double alpha_;
    double delta_;
};

/// Parameters (alpha, beta) of the standard M(alpha, beta, x), beta > alpha > 0.
class StandardParams {
public:
    StandardParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
        if (!(alpha > 0.0) || !(beta > alpha) || !std::isfinite(beta)) {
            throw DomainError("StandardParams: requires beta > alpha > 0");
        }
    }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    /// M(alpha, beta, -x) = N(alpha, beta-alpha-1, x) / B(alpha, beta-alpha)
    KummerParams negative_branch() const { return {alpha_, beta_ - alpha_ - 1.0}; }
    /// M(alpha, beta, x) = e^x N(beta-alpha, alpha-1, x) / B(alpha, beta-alpha)
    KummerParams positive_branch() const { return {beta_ - alpha_, alpha_ - 1.0}; }

private:
    double alpha_;
    double beta_;
};

}  // namespace kbounds
