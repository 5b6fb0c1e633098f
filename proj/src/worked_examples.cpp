#include "kbounds/worked_examples.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "kbounds/incgamma.hpp"
#include "kbounds/kummer.hpp"
#include "kbounds/number_format.hpp"
#include "kbounds/scan.hpp"

namespace kbounds::examples {

namespace {

constexpr double kExactTol = 1e-14;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Bounds = std::function<Enclosure(double)>;

// Two enclosure families of the same quantity: one accurate near x = 0,
// one accurate for large x. The matched bounds take the better of each side.
struct Matching {
    Bounds near;
    Bounds far;

    double lower_switch(double x) const { return near(x).lo - far(x).lo; }
    double upper_switch(double x) const { return far(x).hi - near(x).hi; }
    Enclosure matched(double x) const {
        const Enclosure a = near(x);
        const Enclosure b = far(x);
        return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    }
    double uncertainty(double x) const { return relative_uncertainty(matched(x)); }
    double far_uncertainty(double x) const { return relative_uncertainty(far(x)); }
};

std::string bracket_text(double lo, double hi) {
    return "(" + shortest(lo) + ", " + shortest(hi) + ")";
}

ReportLine exact_line(const std::string& what, const std::string& published, double expected,
                      double got) {
    const bool ok = std::fabs(got - expected) <= kExactTol * std::fabs(expected) ||
                    (expected == 0.0 && got == 0.0);
    return {what, published, shortest(got), ok};
}

ReportLine below_line(const std::string& what, double limit, double got) {
    return {what, "< " + shortest(limit), shortest(got), got < limit};
}

ReportLine switch_line(const std::string& what, const scan::Curve& f, double lo, double hi) {
    const std::vector<scan::Bracket> roots = scan::sign_changes(f, 0.0, 10.0, 0.01);
    std::string text;
    bool ok = roots.size() == 1;
    for (const scan::Bracket& r : roots) {
        const scan::Bracket b = scan::outward(r);
        if (!text.empty()) text += " ";
        text += bracket_text(b.lo, b.hi);
        ok = ok && std::fabs(b.lo - lo) < 1e-9 && std::fabs(b.hi - hi) < 1e-9;
    }
    if (text.empty()) text = "none";
    return {what, bracket_text(lo, hi), text, ok};
}

void peak_lines(std::vector<ReportLine>& out, const std::string& name, const scan::Curve& f,
                double limit, double lo, double hi) {
    const scan::Peak p = scan::maximize(f, 0.0, 20.0, 0.001);
    out.push_back(below_line("sup " + name, limit, p.value));
    out.push_back({"argmax " + name, "in " + bracket_text(lo, hi), shortest(p.x),
                   p.x > lo && p.x < hi});
}

ReportLine decreasing_line(const std::string& what, const scan::Curve& f) {
    bool ok = true;
    double previous = f(0.0);
    for (int i = 1; i <= 100; ++i) {
        const double v = f(0.1 * i);
        if (v > previous) ok = false;
        previous = v;
    }
    return {what, "decreasing", ok ? "nonincreasing on [0, 10]" : "increases somewhere", ok};
}

ReportLine agree_beyond_line(const std::string& what, const scan::Curve& a, const scan::Curve& b,
                             double from) {
    bool ok = true;
    for (int i = 0; from + 0.01 * i <= 10.0 + 1e-9; ++i) {
        const double x = from + 0.01 * i;
        if (a(x) != b(x)) ok = false;
    }
    return {what, "equal for x >= " + shortest(from), ok ? "equal on grid to 10" : "differ", ok};
}

Matching kummer_matching(const KummerParams& p, int n, int m) {
    return {[=](double x) { return taylor_enclosure_N(p, m, x); },
            [=](double x) { return expansion_enclosure(p, n, x); }};
}

std::vector<ReportLine> example_i() {
    const Matching mt = kummer_matching(KummerParams(2.0, 1.5), 2, 4);
    const Enclosure at0 = mt.far(0.0);
    const auto xi = [&](double x) { return mt.far_uncertainty(x); };
    const auto eta = [&](double x) { return mt.uncertainty(x); };
    std::vector<ReportLine> out;
    out.push_back(exact_line("g(0)", "3/32", 3.0 / 32.0, at0.lo));
    out.push_back(exact_line("G(0)", "1/8", 1.0 / 8.0, at0.hi));
    out.push_back(exact_line("xi(0)", "1/7", 1.0 / 7.0, xi(0.0)));
    out.push_back(below_line("xi(1)", 0.098, xi(1.0)));
    out.push_back(below_line("xi(3)", 0.045, xi(3.0)));
    out.push_back(below_line("xi(7)", 0.012, xi(7.0)));
    out.push_back(decreasing_line("xi monotone", xi));
    out.push_back(exact_line("eta(0)", "0", 0.0, eta(0.0)));
    out.push_back(below_line("eta(1)", 0.0021, eta(1.0)));
    out.push_back(switch_line("j switches t -> g", [&](double x) { return mt.lower_switch(x); },
                              1.92, 1.93));
    out.push_back(switch_line("J switches T -> G", [&](double x) { return mt.upper_switch(x); },
                              2.16, 2.17));
    peak_lines(out, "eta", eta, 0.062, 2.16, 2.17);
    out.push_back(agree_beyond_line("eta = xi", eta, xi, 2.17));
    return out;
}

std::vector<ReportLine> example_ii() {
    const KummerParams p(0.5, 1.5);
    const Matching expansion = kummer_matching(p, 2, 4);
    // The elementary bounds diverge at x = 0, where the Taylor side is exact.
    const Matching mt{expansion.near, [=](double x) {
                          if (x == 0.0) return Enclosure{-kInf, kInf};
                          return elementary_enclosure_N(p, 2, method::Pade{1}, x);
                      }};
    const auto theta = [&](double x) { return mt.uncertainty(x); };
    const Enclosure at0 = expansion.far(0.0);
    std::vector<ReportLine> out;
    out.push_back(exact_line("g(0)", "23/20", 23.0 / 20.0, at0.lo));
    out.push_back(exact_line("G(0)", "6/5", 6.0 / 5.0, at0.hi));

    bool ordered = true;
    double worst = kInf;
    for (int i = 50; i <= 2000; ++i) {
        const double x = 0.01 * i;
        const Enclosure g = expansion.far(x);
        const Enclosure e = mt.far(x);
        worst = std::min({worst, g.lo - e.lo, e.hi - g.hi});
        if (e.lo > g.lo || e.hi < g.hi) ordered = false;
    }
    out.push_back({"p <= g and G <= P on [0.5, 20]", "holds",
                   "min margin " + shortest(worst), ordered});
    out.push_back(exact_line("theta(0)", "0", 0.0, theta(0.0)));
    out.push_back(below_line("theta(1)", 0.00028, theta(1.0)));
    out.push_back(below_line("theta(3)", 0.0051, theta(3.0)));
    out.push_back(below_line("theta(7)", 0.0011, theta(7.0)));
    out.push_back(switch_line("l switches t -> p", [&](double x) { return mt.lower_switch(x); },
                              1.95, 1.96));
    out.push_back(switch_line("L switches T -> P", [&](double x) { return mt.upper_switch(x); },
                              2.41, 2.42));
    peak_lines(out, "theta", theta, 0.0074, 2.41, 2.42);
    return out;
}

std::vector<ReportLine> example_iii() {
    const Matching mt = kummer_matching(KummerParams(2.0, -0.5), 4, 4);
    const Enclosure at0 = mt.far(0.0);
    const auto xi = [&](double x) { return mt.far_uncertainty(x); };
    const auto eta = [&](double x) { return mt.uncertainty(x); };
    std::vector<ReportLine> out;
    out.push_back(exact_line("g(0)", "667/768", 667.0 / 768.0, at0.lo));
    out.push_back(exact_line("G(0)", "1087/768", 1087.0 / 768.0, at0.hi));
    out.push_back(exact_line("xi(0)", "210/877", 210.0 / 877.0, xi(0.0)));
    out.push_back(below_line("xi(1)", 0.22, xi(1.0)));
    out.push_back(below_line("xi(3)", 0.15, xi(3.0)));
    out.push_back(below_line("xi(7)", 0.046, xi(7.0)));
    out.push_back(decreasing_line("xi monotone", xi));
    out.push_back(exact_line("eta(0)", "0", 0.0, eta(0.0)));
    out.push_back(below_line("eta(1)", 0.016, eta(1.0)));
    out.push_back(switch_line("j switches t -> g", [&](double x) { return mt.lower_switch(x); },
                              1.57, 1.58));
    out.push_back(switch_line("J switches T -> G", [&](double x) { return mt.upper_switch(x); },
                              1.54, 1.55));
    peak_lines(out, "eta", eta, 0.20, 1.57, 1.58);
    out.push_back(agree_beyond_line("eta = xi", eta, xi, 1.58));
    return out;
}

std::vector<ReportLine> gamma_half() {
    const Matching mt{[](double x) { return taylor_enclosure_gamma(0.5, x, 4); },
                      [](double x) {
                          if (x == 0.0) return Enclosure{-kInf, kInf};
                          return pade_enclosure_gamma(0.5, x, 1);
                      }};
    std::vector<ReportLine> out;
    double worst = 0.0;
    for (int i = 0; i <= 10000; ++i) worst = std::max(worst, mt.uncertainty(0.001 * i));
    out.push_back(below_line("max (H-h)/(H+h) on [0, 10]", 0.005, worst));
    const scan::Peak peak =
        scan::maximize([&](double x) { return mt.uncertainty(x); }, 0.0, 10.0, 0.001);
    out.push_back({"argmax (H-h)/(H+h)", "in (1.48, 1.49)", shortest(peak.x),
                   peak.x > 1.48 && peak.x < 1.49});
    out.push_back(switch_line("h switches Taylor -> Pade",
                              [&](double x) { return mt.lower_switch(x); }, 1.16, 1.17));
    out.push_back(switch_line("H switches Taylor -> Pade",
                              [&](double x) { return mt.upper_switch(x); }, 1.48, 1.49));
    return out;
}

std::vector<ReportLine> footnote() {
    const KummerParams p(10.0, 10.0);
    const Enclosure e = expansion_enclosure(p, 1, 0.0);
    const double sum = e.lo + e.hi;
    const double xi = relative_uncertainty(p, 1, 0.0);
    return {
        {"G_1(10,10,0) + g_1(10,10,0)", "< 0", shortest(sum), sum < 0.0},
        {"xi_1(10,10,0)", "finite and positive", shortest(xi), std::isfinite(xi) && xi > 0.0},
    };
}

}  // namespace

const std::vector<std::string>& selectors() {
    static const std::vector<std::string> names{"i", "ii", "iii", "gamma-half", "footnote"};
    return names;
}

std::vector<ReportLine> reproduce(std::string_view which) {
    if (which == "i") return example_i();
    if (which == "ii") return example_ii();
    if (which == "iii") return example_iii();
    if (which == "gamma-half") return gamma_half();
    if (which == "footnote") return footnote();
    throw DomainError("unknown example '" + std::string(which) + "'");
}

}  // namespace kbounds::examples
