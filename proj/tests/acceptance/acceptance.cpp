// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fburgers/diagnostics.hpp"
#include "fburgers/dynamics.hpp"
#include "fburgers/oracles.hpp"
#include "fburgers/simulation.hpp"

using namespace fburgers;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Timed {
    RunResult result;
    double seconds;
};

Timed timed_run(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    RunResult r = run_simulation(cfg);
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    return {std::move(r), d.count()};
}

RunConfig viscous_config() {
    RunConfig cfg;
    cfg.n = 256;
    cfg.params.gamma = 0.1;
    cfg.params.alpha = 1.0;
    cfg.params.t_final = 2.0;
    return cfg;
}

RunConfig shock_config() {
    RunConfig cfg;
    cfg.n = 1024;
    cfg.params.dt = 1e-4;
    cfg.params.t_final = 1.2;
    return cfg;
}

// The shock run feeds criteria 4 and 7; compute it once.
const Timed& shock_run() {
    static const Timed run = timed_run(shock_config());
    return run;
}

const DiagnosticsRecord* record_at(const RunResult& r, double t) {
    for (const auto& rec : r.records)
        if (std::abs(rec.t - t) <= 1e-12) return &rec;
    return nullptr;
}

Outcome mass_conservation() {
    const Timed run = timed_run(viscous_config());
    double worst = 0.0;
    for (const auto& rec : run.result.records) worst = std::max(worst, std::abs(rec.mass));
    const bool ok = run.result.status == RunStatus::completed && worst <= 1e-10 && run.seconds < 10.0;
    return {ok, fmt("max |mass| = %.3e over %zu records, runtime %.2f s", worst, run.result.records.size(),
                    run.seconds)};
}

Outcome l2_principle() {
    const RunResult viscous = run_simulation(viscous_config());
    double worst_rise = -INFINITY;
    for (std::size_t i = 1; i < viscous.records.size(); ++i)
        worst_rise = std::max(worst_rise, viscous.records[i].l2 - viscous.records[i - 1].l2);

    RunConfig inviscid;
    inviscid.n = 256;
    inviscid.params.t_final = 0.5;
    const RunResult flat = run_simulation(inviscid);
    const double l2_0 = flat.records.front().l2;
    double drift = 0.0;
    for (const auto& rec : flat.records) drift = std::max(drift, std::abs(rec.l2 - l2_0) / l2_0);

    const bool ok = viscous.status == RunStatus::completed && flat.status == RunStatus::completed &&
                    worst_rise <= 1e-10 && drift <= 1e-6;
    return {ok, fmt("largest step-to-step l2 change %.3e (viscous); inviscid relative drift %.3e to t = 0.5",
                    worst_rise, drift)};
}

Outcome linf_principle() {
    RunConfig cfg;
    cfg.params.gamma = 0.5;
    cfg.params.alpha = 2.0;
    cfg.params.t_final = 2.0;
    const RunResult r = run_simulation(cfg);
    double hi = -INFINITY, lo = INFINITY;
    for (const auto& rec : r.records) {
        hi = std::max(hi, rec.max_u);
        lo = std::min(lo, rec.min_u);
    }
    const bool ok = r.status == RunStatus::completed && hi <= 1.0 + 1e-6 && lo >= -1.0 - 1e-6;
    return {ok, fmt("max u = %.12f, min u = %.12f over %zu records", hi, lo, r.records.size())};
}

Outcome blowup_law() {
    const Timed& run = shock_run();
    const DiagnosticsRecord* at = record_at(run.result, 0.8);
    const double slope = at ? at->min_slope : NAN;
    const double rel = std::abs(slope - slope_closed_form(-1.0, 0.8)) / 5.0;
    const auto& rep = run.result.report;
    const double td = rep.detected_t.value_or(NAN);
    const bool ok = at && rel <= 0.02 && run.result.status == RunStatus::blowup_detected &&
                    rep.detection_cause == DetectionCause::slope_threshold && td >= 0.9 && td <= 1.05 &&
                    run.seconds < 60.0;
    return {ok, fmt("min_slope(0.8) = %.10f (rel. error %.2e), detected_t = %.4f (%s), runtime %.2f s", slope, rel,
                    td, to_string(rep.detection_cause), run.seconds)};
}

Outcome characteristics_match() {
    RunConfig cfg;
    cfg.n = 512;
    cfg.params.dt = 1e-4;
    cfg.params.t_final = 0.5;
    const RunResult r = run_simulation(cfg);
    const Grid g(cfg.n);
    double worst = 0.0;
    for (int j = 0; j < cfg.n; ++j) {
        const double exact = characteristics_solution(cfg.ic, g.node(j), 0.5);
        worst = std::max(worst, std::abs(r.final_state.values[static_cast<std::size_t>(j)] - exact));
    }
    const bool ok = r.status == RunStatus::completed && r.final_state.time == 0.5 && worst <= 1e-6;
    return {ok, fmt("max nodal error %.3e at t = %.3f", worst, r.final_state.time)};
}

double mode_two_amplitude(double alpha, int steps) {
    const Grid g(8);
    SimParams p;
    p.gamma = 1.0;
    p.alpha = alpha;
    p.linear_only = true;
    NodalField u;
    for (double x : g.nodes()) u.values.push_back(std::cos(2.0 * x));
    const double dt = 1.0 / steps;
    for (int i = 0; i < steps; ++i) u = rk4_step(u, g, p, dt);
    return 2.0 * forward_dft(u, g)[2].real();
}

Outcome linear_mode() {
    bool ok = true;
    std::string detail;
    for (double alpha : {0.5, 1.0, 2.0}) {
        const double exact = std::exp(-std::pow(2.0, alpha));
        const double amp_err = std::abs(mode_two_amplitude(alpha, 1000) - exact);
        ok = ok && amp_err <= 1e-8;
        detail += fmt("alpha=%g: amplitude error %.2e, ratios", alpha, amp_err);
        double prev = std::abs(mode_two_amplitude(alpha, 10) - exact);
        for (int level = 1; level <= 3; ++level) {
            const double err = std::abs(mode_two_amplitude(alpha, 10 << level) - exact);
            const double ratio = prev / err;
            ok = ok && ratio >= 12.0 && ratio <= 20.0;
            detail += fmt(" %.2f", ratio);
            prev = err;
        }
        detail += alpha < 2.0 ? "; " : "";
    }
    return {ok, detail};
}

Outcome bkm_monitor() {
    const RunResult& r = shock_run().result;
    bool monotone = true;
    for (std::size_t i = 1; i < r.records.size(); ++i)
        monotone = monotone && r.records[i].bkm_integral >= r.records[i - 1].bkm_integral;
    const DiagnosticsRecord* at = record_at(r, 0.95);
    const double value = at ? at->bkm_integral : NAN;
    const double closed = -std::log(1.0 - 0.95);
    const bool ok = monotone && at && value > 3.0;
    return {ok, fmt("non-decreasing: %s; integral(0.95) = %.6f vs -ln(0.05) = %.6f (relative gap %.1e)",
                    monotone ? "yes" : "no", value, closed, std::abs(value - closed) / closed)};
}

Outcome vanishing_viscosity() {
    std::vector<NodalField> finals;
    std::string detail;
    for (double gamma : {0.2, 0.1, 0.05}) {
        RunConfig cfg;
        cfg.n = 512;
        cfg.params.gamma = gamma;
        cfg.params.alpha = 2.0;
        cfg.params.t_final = 1.2;
        const RunResult r = run_simulation(cfg);
        if (r.status != RunStatus::completed)
            return {false, fmt("gamma=%g run ended with %s", gamma, to_string(r.status))};
        finals.push_back(r.final_state);
    }
    std::vector<double> dist;
    for (std::size_t i = 1; i < finals.size(); ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < finals[i].values.size(); ++j)
            d = std::max(d, std::abs(finals[i].values[j] - finals[i - 1].values[j]));
        dist.push_back(d);
    }
    const bool ok = dist[1] < dist[0];
    return {ok, fmt("|u(0.2) - u(0.1)| = %.6f, |u(0.1) - u(0.05)| = %.6f", dist[0], dist[1])};
}

Outcome spectral_exactness() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double worst = 0.0;
    std::string per_n;
    for (int n : {4, 16, 64, 250, 1024}) {
        const Grid g(n);
        std::vector<double> a, b;
        for (int k = 0; k < n / 2; ++k) {
            a.push_back(coef(rng));
            b.push_back(k == 0 ? 0.0 : coef(rng));
        }
        NodalField u;
        std::vector<double> du;
        for (int j = 0; j < n; ++j) {
            // extended precision so the reference error stays below the tolerance
            long double v = 0.0L, dv = 0.0L;
            for (int k = 0; k < n / 2; ++k) {
                // k x_j = pi k (2j - N) / N, reduced exactly in integers
                const long m = ((static_cast<long>(k) * (2 * j - n)) % (2L * n) + 2L * n) % (2L * n);
                const long double angle = std::numbers::pi_v<long double> * static_cast<long double>(m) / n;
                const long double c = std::cos(angle), s = std::sin(angle);
                v += a[k] * c + b[k] * s;
                dv += k * (-a[k] * s + b[k] * c);
            }
            u.values.push_back(static_cast<double>(v));
            du.push_back(static_cast<double>(dv));
        }
        const NodalField d = nodal_derivative(u, g);
        double err = 0.0;
        for (int j = 0; j < n; ++j) err = std::max(err, std::abs(d.values[j] - du[j]));
        per_n += fmt(" N=%d:%.1e", n, err);
        worst = std::max(worst, err);
    }

    // multiplier identities
    const Grid g(16);
    const auto field = [&](auto f) {
        NodalField u;
        for (double x : g.nodes()) u.values.push_back(f(x));
        return u;
    };
    const auto apply = [&](const NodalField& u, double alpha) {
        return inverse_dft(fractional_laplacian(forward_dft(u, g), alpha), g);
    };
    double mult = 0.0;
    const NodalField c2 = field([](double x) { return std::cos(2 * x); });
    const NodalField c1 = field([](double x) { return std::cos(x); });
    const NodalField k7 = field([](double) { return 7.0; });
    const NodalField l1 = apply(c2, 1.0), lh = apply(c1, 0.5);
    for (int j = 0; j < 16; ++j) {
        mult = std::max(mult, std::abs(l1.values[j] - 2.0 * c2.values[j]));
        mult = std::max(mult, std::abs(lh.values[j] - c1.values[j]));
        for (double alpha : {0.3, 1.0, 2.0}) mult = std::max(mult, std::abs(apply(k7, alpha).values[j]));
    }
    const bool ok = worst <= 1e-11 && mult <= 1e-13;
    return {ok, fmt("max derivative error %.3e (%s); max multiplier identity error %.3e", worst, per_n.c_str() + 1, mult)};
}

Outcome determinism() {
    RunConfig a = viscous_config();
    a.output_dir = fs::temp_directory_path() / "fburgers_acceptance_a";
    RunConfig b = a;
    b.output_dir = fs::temp_directory_path() / "fburgers_acceptance_b";
    fs::remove_all(a.output_dir);
    fs::remove_all(b.output_dir);
    write_outputs(run_simulation(a), a);
    write_outputs(run_simulation(b), b);
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const std::string x = slurp(a.output_dir / "diagnostics.csv");
    const std::string y = slurp(b.output_dir / "diagnostics.csv");
    return {!x.empty() && x == y, fmt("%zu bytes each, identical: %s", x.size(), x == y ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"mass conservation", mass_conservation},
        {"L2 principle", l2_principle},
        {"L-infinity principle", linf_principle},
        {"blow-up law", blowup_law},
        {"characteristics oracle", characteristics_match},
        {"linear-mode exactness and order", linear_mode},
        {"BKM monitor", bkm_monitor},
        {"vanishing viscosity", vanishing_viscosity},
        {"spectral operator exactness", spectral_exactness},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s  %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
