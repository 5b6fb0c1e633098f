#include "kbounds/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kbounds/cli/grid.hpp"
#include "kbounds/kummer.hpp"
#include "kbounds/oracle.hpp"
#include "kbounds/special.hpp"
#include "kbounds/worked_examples.hpp"

namespace kbounds::cli {

namespace {

constexpr double kCheckSlack = 1e-9;
constexpr const char* kNormGrid = "0:100:0.1";

void require_nonnegative(const std::vector<double>& xs) {
    for (double x : xs) {
        if (!(x >= 0.0)) throw UsageError("x must be >= 0, got " + std::to_string(x));
    }
}

void check_contains(const char* what, double x, double lo, double value, double hi) {
    const double slack = kCheckSlack * std::max(1.0, std::fabs(value));
    if (!(lo - slack <= value && value <= hi + slack)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << ": oracle " << value << " outside [" << lo << ", " << hi << "] at x = " << x;
        throw NumericalFailure(msg.str());
    }
}

Cell optional_cell(const std::optional<Enclosure>& e, bool upper) {
    if (!e) return std::monostate{};
    return upper ? e->hi : e->lo;
}

}  // namespace

Table enclose_table(double alpha, double delta, int n, int m, const std::vector<double>& xs,
                    bool check) {
    const KummerParams p(alpha, delta);
    if (n < 1 || m < 1) throw UsageError("--n and --m must be >= 1");
    require_nonnegative(xs);
    Table t;
    t.command = "enclose";
    t.parameters = {{"alpha", alpha}, {"delta", delta}, {"n", n}, {"m", m}};
    t.columns = {"x", "g_n", "G_n", "t_m", "T_m", "j", "J", "oracle_N", "xi_n", "eta"};
    for (double x : xs) {
        const Enclosure g = expansion_enclosure(p, n, x);
        const Enclosure taylor = taylor_enclosure_N(p, m, x);
        const Enclosure best = matched_enclosure_N(p, n, m, x);
        const double oracle = oracle::n_reference(p, x).value;
        if (check) check_contains("enclose", x, best.lo, oracle, best.hi);
        t.rows.push_back({x, g.lo, g.hi, taylor.lo, taylor.hi, best.lo, best.hi, oracle,
                          relative_uncertainty(g), relative_uncertainty(best)});
    }
    return t;
}

Table gamma_table(double nu, int m, int q, TailFamily tail, const std::vector<double>& xs,
                  bool check) {
    if (!(nu > 0.0)) throw UsageError("--nu must be > 0");
    if (m < 1) throw UsageError("--m must be >= 1");
    if (q < 0) throw UsageError("--q must be >= 0");
    require_nonnegative(xs);
    const bool laurent = tail == TailFamily::laurent;
    const std::string family = laurent ? "laurent" : "pade";
    Table t;
    t.command = "gamma";
    t.parameters = {{"nu", nu}, {"m", m}, {"q", q}, {"tail", family}};
    t.columns = {"x",           "taylor_lo",  "taylor_hi",  family + "_lo", family + "_hi",
                 "matched_lo", "matched_hi", "oracle",     "rel_uncertainty"};
    for (double x : xs) {
        const Enclosure taylor = taylor_enclosure_gamma(nu, x, m);
        std::optional<Enclosure> far;
        if (x > 0.0 || is_integer(nu)) {
            far = laurent ? enclose_gamma(nu, x, method::Laurent{q})
                          : enclose_gamma(nu, x, method::Pade{q});
        }
        const Enclosure best = matched_enclosure_gamma(nu, x, m, q, tail);
        const double oracle = oracle::gamma_reference(nu, x).value;
        if (check) check_contains("gamma", x, best.lo, oracle, best.hi);
        t.rows.push_back({x, taylor.lo, taylor.hi, optional_cell(far, false),
                          optional_cell(far, true), best.lo, best.hi, oracle,
                          relative_uncertainty(best)});
    }
    return t;
}

Table error_ratio_table(double alpha, double delta, const std::vector<double>& xs, int n_max) {
    const KummerParams p(alpha, delta);
    if (n_max < 1 || n_max > kMaxErrorRatioOrder) {
        throw UsageError("--n-max must be in [1, " + std::to_string(kMaxErrorRatioOrder) + "]");
    }
    require_nonnegative(xs);
    Table t;
    t.command = "error-ratio";
    t.parameters = {{"alpha", alpha}, {"delta", delta}, {"n_max", n_max}};
    t.columns = {"n", "x", "abs_eps", "calE", "ratio"};
    for (double x : xs) {
        const double N = oracle::n_reference(p, x).value;
        for (int n = 1; n <= n_max; ++n) {
            const double calE = error_bounds(p, n, x).calE;
            // calE = 0 only when the expansion terminates, and then eps_n = 0 exactly.
            if (calE == 0.0) {
                t.rows.push_back({static_cast<double>(n), x, 0.0, 0.0, std::monostate{}});
                continue;
            }
            const double eps = std::fabs(N - gamma_partial_sum(p, n, x));
            t.rows.push_back({static_cast<double>(n), x, eps, calE, eps / calE});
        }
    }
    return t;
}

Table examples_table(const std::string& which) {
    const auto& names = examples::selectors();
    if (std::find(names.begin(), names.end(), which) == names.end()) {
        throw UsageError("unknown example '" + which + "'");
    }
    Table t;
    t.command = "examples";
    t.parameters = {{"which", which}};
    t.columns = {"quantity", "published", "recomputed", "status"};
    for (const auto& line : examples::reproduce(which)) {
        t.rows.push_back({line.quantity, line.published, line.recomputed,
                          std::string(line.pass ? "PASS" : "FAIL")});
    }
    return t;
}

Table norm_table(double alpha, double delta, double sigma, const std::vector<int>& orders,
                 const std::vector<double>& xs) {
    const KummerParams p(alpha, delta);
    if (!(sigma >= 0.0 && sigma <= alpha)) throw UsageError("--sigma must lie in [0, alpha]");
    require_nonnegative(xs);
    std::vector<double> N;
    N.reserve(xs.size());
    for (double x : xs) N.push_back(oracle::n_reference(p, x).value);
    Table t;
    t.command = "norm";
    t.parameters = {{"alpha", alpha}, {"delta", delta}, {"sigma", sigma}};
    t.columns = {"n", "sigma", "bound", "empirical_sup", "argmax_x"};
    for (int n : orders) {
        if (n < 1) throw UsageError("--n must be >= 1");
        double sup = 0.0;
        double at = xs.empty() ? 0.0 : xs.front();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double v = std::pow(xs[i], sigma) * std::fabs(N[i] - gamma_partial_sum(p, n, xs[i]));
            if (v > sup) {
                sup = v;
                at = xs[i];
            }
        }
        t.rows.push_back({static_cast<double>(n), sigma, sup_norm_error_bound(p, sigma, n), sup, at});
    }
    return t;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-sided enclosures of the Kummer function N(alpha, delta, x)", "kbounds"};
    app.require_subcommand(1);

    double alpha = 0.0;
    double delta = 0.0;
    double nu = 0.0;
    double sigma = 0.0;
    int n = 2;
    int m = 4;
    int q = 1;
    int n_max = 13;
    std::string grid_text;
    std::vector<double> xs;
    std::string format = "csv";
    std::string output;
    std::string tail = "pade";
    std::string which;
    bool check = false;

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", output, "Write to this file instead of standard output");
    };
    const auto add_points = [&](CLI::App* sub) {
        sub->add_option("--grid", grid_text, "x grid start:stop:step");
        sub->add_option("--x", xs, "Evaluation point (repeatable)");
    };

    auto* enclose = app.add_subcommand("enclose", "Enclosures of N along an x grid");
    enclose->add_option("--alpha", alpha, "alpha > 0")->required();
    enclose->add_option("--delta", delta, "delta > -1")->required();
    enclose->add_option("--n", n, "Number of Gamma terms")->capture_default_str();
    enclose->add_option("--m", m, "Taylor order")->capture_default_str();
    enclose->add_flag("--check", check, "Fail unless every row contains the oracle value");
    add_points(enclose);
    add_output(enclose);

    auto* gamma = app.add_subcommand("gamma", "Enclosures of gamma(nu, x) along an x grid");
    gamma->add_option("--nu", nu, "nu > 0")->required();
    gamma->add_option("--m", m, "Taylor order")->capture_default_str();
    gamma->add_option("--q", q, "Pade or Laurent order")->capture_default_str();
    gamma->add_option("--tail", tail, "Large-x family")
        ->check(CLI::IsMember({"pade", "laurent"}))
        ->capture_default_str();
    gamma->add_flag("--check", check, "Fail unless every row contains the oracle value");
    add_points(gamma);
    add_output(gamma);

    auto* ratio = app.add_subcommand("error-ratio", "|eps_n| against its bound for n = 1..n-max");
    ratio->add_option("--alpha", alpha, "alpha > 0")->required();
    ratio->add_option("--delta", delta, "delta > -1")->required();
    ratio->add_option("--n-max", n_max, "Largest n (<= 200)")->capture_default_str();
    add_points(ratio);
    add_output(ratio);

    auto* examples_cmd = app.add_subcommand("examples", "Recompute a published worked example");
    examples_cmd->add_option("which", which, "i, ii, iii, gamma-half or footnote")
        ->required()
        ->check(CLI::IsMember(examples::selectors()));
    add_output(examples_cmd);

    auto* norm = app.add_subcommand("norm", "Sup-norm bound against the sampled sup of x^sigma |eps_n|");
    norm->add_option("--alpha", alpha, "alpha > 0")->required();
    norm->add_option("--delta", delta, "delta > -1")->required();
    norm->add_option("--sigma", sigma, "sigma in [0, alpha]")->required();
    auto* norm_n = norm->add_option("--n", n, "Number of Gamma terms")->capture_default_str();
    norm->add_option("--n-max", n_max, "Emit rows for n = 1..n-max")->excludes(norm_n);
    norm->footer("Without --grid or --x the sup is sampled on " + std::string(kNormGrid) + ".");
    add_points(norm);
    add_output(norm);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto points = [&]() {
            std::vector<double> all;
            if (!grid_text.empty()) all = EvalGrid::parse(grid_text).points();
            all.insert(all.end(), xs.begin(), xs.end());
            if (all.empty()) throw UsageError("give --grid or at least one --x");
            return all;
        };

        Table table;
        if (enclose->parsed()) {
            table = enclose_table(alpha, delta, n, m, points(), check);
        } else if (gamma->parsed()) {
            const TailFamily family = tail == "laurent" ? TailFamily::laurent : TailFamily::pade;
            table = gamma_table(nu, m, q, family, points(), check);
        } else if (ratio->parsed()) {
            table = error_ratio_table(alpha, delta, points(), n_max);
        } else if (examples_cmd->parsed()) {
            table = examples_table(which);
        } else {
            std::vector<int> orders;
            if (norm->count("--n-max") > 0) {
                for (int k = 1; k <= n_max; ++k) orders.push_back(k);
            } else {
                orders.push_back(n);
            }
            if (grid_text.empty() && xs.empty()) grid_text = kNormGrid;
            table = norm_table(alpha, delta, sigma, orders, points());
        }

        const OutputFormat kind = format == "json" ? OutputFormat::json : OutputFormat::csv;
        if (output.empty()) {
            write_table(table, kind, out);
        } else {
            std::ofstream file(output, std::ios::binary);
            if (!file) throw UsageError("cannot open '" + output + "' for writing");
            write_table(table, kind, file);
            if (!file) throw UsageError("failed writing '" + output + "'");
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedOrder& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EnclosureCollapse& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ToleranceNotMet& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace kbounds::cli
