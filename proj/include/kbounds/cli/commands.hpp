#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kbounds/cli/table.hpp"
#include "kbounds/incgamma.hpp"

namespace kbounds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kMaxErrorRatioOrder = 200;

/// A row failed its containment check (exit code 3).
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// x, g_n, G_n, t_m, T_m, j, J, oracle_N, xi_n, eta. With check set, every
/// row must satisfy j <= oracle_N <= J.
Table enclose_table(double alpha, double delta, int n, int m, const std::vector<double>& xs,
                    bool check = false);

/// x, taylor_lo, taylor_hi, pade_lo, pade_hi, matched_lo, matched_hi, oracle,
/// rel_uncertainty. The tail columns hold the Laurent bounds when tail is
/// TailFamily::laurent.
Table gamma_table(double nu, int m, int q, TailFamily tail, const std::vector<double>& xs,
                  bool check = false);

/// n, x, abs_eps, calE, ratio for n = 1..n_max at every x.
Table error_ratio_table(double alpha, double delta, const std::vector<double>& xs, int n_max);

/// quantity, published, recomputed, status.
Table examples_table(const std::string& which);

/// n, sigma, bound, empirical_sup, argmax_x over the given x grid.
Table norm_table(double alpha, double delta, double sigma, const std::vector<int>& orders,
                 const std::vector<double>& xs);

/// Command-line entry point. Returns 0 on success, 2 on usage errors and 3
/// on numerical failures; diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kbounds::cli
