#include "fburgers/fburgers.h"

#include <algorithm>
#include <exception>
#include <string>
#include <vector>

#include "fburgers/error.hpp"
#include "fburgers/simulation.hpp"

struct fb_config {
    fburgers::RunConfig cfg;
};

struct fb_result {
    fburgers::RunConfig cfg;
    fburgers::RunResult result;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_key;

fb_error map_kind(fburgers::ErrorKind kind) {
    using fburgers::ErrorKind;
    switch (kind) {
    case ErrorKind::InvalidInput: return FB_ERR_INVALID_ARGUMENT;
    case ErrorKind::Usage: return FB_ERR_USAGE;
    case ErrorKind::SymmetryViolation: return FB_ERR_SYMMETRY;
    case ErrorKind::InvalidState:
    case ErrorKind::Instability:
    case ErrorKind::Convergence: return FB_ERR_NUMERIC;
    case ErrorKind::SingularTime:
    case ErrorKind::Domain: return FB_ERR_DOMAIN;
    case ErrorKind::Io: return FB_ERR_IO;
    }
    return FB_ERR_INTERNAL;
}

fb_error fail(fb_error code, std::string message, std::string key = {}) {
    last_error = std::move(message);
    last_error_key = std::move(key);
    return code;
}

// Runs body, translating every exception into an error code.
template <typename Body>
fb_error guarded(Body&& body) noexcept {
    try {
        last_error.clear();
        last_error_key.clear();
        body();
        return FB_OK;
    } catch (const fburgers::Error& e) {
        return fail(map_kind(e.kind()), e.what(), e.key());
    } catch (const fburgers::HelpRequested& h) {
        return fail(FB_ERR_HELP_REQUESTED, h.text);
    } catch (const std::exception& e) {
        return fail(FB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FB_ERR_INTERNAL, "unknown error");
    }
}

fb_error null_argument(const char* what) { return fail(FB_ERR_INVALID_ARGUMENT, std::string(what) + " is null"); }

fburgers::NodalField wrap(size_t n, const double* u) { return fburgers::NodalField{std::vector<double>(u, u + n), 0.0}; }

void unwrap(const fburgers::NodalField& f, double* out) { std::copy(f.values.begin(), f.values.end(), out); }

}  // namespace

extern "C" {

const char* fb_version(void) { return "1.0.0"; }

const char* fb_last_error(void) { return last_error.c_str(); }

const char* fb_last_error_key(void) { return last_error_key.c_str(); }

const char* fb_usage(void) {
    static const std::string text = fburgers::usage_text();
    return text.c_str();
}

fb_error fb_config_create(fb_config** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new fb_config{}; });
}

fb_error fb_config_from_args(int argc, const char* const* argv, fb_config** out) {
    if (!out) return null_argument("out");
    if (argc < 1 || !argv) return null_argument("argv");
    *out = nullptr;
    return guarded([&] { *out = new fb_config{fburgers::parse_config(argc, argv)}; });
}

fb_error fb_config_set(fb_config* cfg, const char* key, const char* value) {
    if (!cfg) return null_argument("cfg");
    if (!key || !value) return null_argument("key/value");
    return guarded([&] {
        fburgers::RunConfig updated = cfg->cfg;
        fburgers::apply_setting(updated, key, value);
        cfg->cfg = std::move(updated);
    });
}

fb_error fb_config_validate(const fb_config* cfg) {
    if (!cfg) return null_argument("cfg");
    return guarded([&] { cfg->cfg.validate(); });
}

void fb_config_destroy(fb_config* cfg) { delete cfg; }

fb_error fb_run(const fb_config* cfg, fb_result** out) {
    if (!cfg) return null_argument("cfg");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new fb_result{cfg->cfg, fburgers::run_simulation(cfg->cfg)}; });
}

fb_run_status fb_result_status(const fb_result* result) {
    if (!result) return FB_RUN_NUMERIC_FAILURE;
    return static_cast<fb_run_status>(result->result.status);
}

int fb_result_exit_code(const fb_result* result) {
    if (!result) return FB_EXIT_NUMERIC_FAILURE;
    return fburgers::exit_code(result->result.status);
}

size_t fb_result_record_count(const fb_result* result) { return result ? result->result.records.size() : 0; }

fb_error fb_result_record(const fb_result* result, size_t index, fb_record* out) {
    if (!result || !out) return null_argument("result/out");
    if (index >= result->result.records.size()) return fail(FB_ERR_INVALID_ARGUMENT, "record index out of range");
    const auto& r = result->result.records[index];
    *out = fb_record{r.t, r.mass, r.l2, r.max_u, r.min_u, r.min_slope, r.bkm_integral, r.h3, r.tail_fraction};
    return FB_OK;
}

fb_error fb_result_report(const fb_result* result, fb_blowup_report* out) {
    if (!result || !out) return null_argument("result/out");
    const auto& rep = result->result.report;
    out->has_predicted_t_star = rep.predicted_t_star.has_value();
    out->predicted_t_star = rep.predicted_t_star.value_or(0.0);
    out->detected = rep.detected;
    out->detected_t = rep.detected_t.value_or(0.0);
    out->cause = static_cast<fb_detection_cause>(rep.detection_cause);
    return FB_OK;
}

size_t fb_result_snapshot_count(const fb_result* result) { return result ? result->result.snapshots.size() : 0; }

fb_error fb_result_snapshot(const fb_result* result, size_t index, double* t, const double** values, size_t* n) {
    if (!result || !t || !values || !n) return null_argument("result/t/values/n");
    if (index >= result->result.snapshots.size()) return fail(FB_ERR_INVALID_ARGUMENT, "snapshot index out of range");
    const auto& snap = result->result.snapshots[index];
    *t = snap.t;
    *values = snap.field.values.data();
    *n = snap.field.values.size();
    return FB_OK;
}

fb_error fb_result_write(const fb_result* result) {
    if (!result) return null_argument("result");
    return guarded([&] { fburgers::write_outputs(result->result, result->cfg); });
}

void fb_result_destroy(fb_result* result) { delete result; }

fb_error fb_grid_nodes(size_t n, double* nodes) {
    if (!nodes) return null_argument("nodes");
    return guarded([&] {
        const fburgers::Grid g(static_cast<int>(n));
        std::copy(g.nodes().begin(), g.nodes().end(), nodes);
    });
}

fb_error fb_derivative(size_t n, const double* u, double* du) {
    if (!u || !du) return null_argument("u/du");
    return guarded([&] {
        const fburgers::Grid g(static_cast<int>(n));
        unwrap(fburgers::nodal_derivative(wrap(n, u), g), du);
    });
}

fb_error fb_fractional_laplacian(size_t n, double alpha, const double* u, double* out) {
    if (!u || !out) return null_argument("u/out");
    return guarded([&] {
        const fburgers::Grid g(static_cast<int>(n));
        const auto s = fburgers::fractional_laplacian(fburgers::forward_dft(wrap(n, u), g), alpha);
        unwrap(fburgers::inverse_dft(s, g), out);
    });
}

fb_error fb_predicted_blowup_time(size_t n, const double* f, double* t_star, int* has_t_star) {
    if (!f || !t_star || !has_t_star) return null_argument("f/t_star/has_t_star");
    return guarded([&] {
        const fburgers::Grid g(static_cast<int>(n));
        const auto t = fburgers::predicted_blowup_time(wrap(n, f), g);
        *has_t_star = t.has_value();
        *t_star = t.value_or(0.0);
    });
}

}  // extern "C"
