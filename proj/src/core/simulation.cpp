#include "fburgers/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "fburgers/error.hpp"

namespace fburgers {

namespace {

bool same_time(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

RunStatus status_for(DetectionCause cause) {
    switch (cause) {
    case DetectionCause::slope_threshold: return RunStatus::blowup_detected;
    case DetectionCause::resolution_loss: return RunStatus::resolution_lost;
    case DetectionCause::non_finite: return RunStatus::numeric_failure;
    case DetectionCause::none: break;
    }
    return RunStatus::completed;
}

}  // namespace

RunResult run_simulation(const RunConfig& cfg) {
    cfg.validate();
    const Grid g(cfg.n);
    const SimParams& p = cfg.params;

    RunResult result;
    NodalField u = cfg.ic.sample(g);
    u.time = 0.0;

    result.report.predicted_t_star = predicted_blowup_time(u, g);
    if (p.effective_gamma() > 0.0 && result.report.predicted_t_star)
        result.warnings.push_back("predicted blow-up time is an inviscid prediction; gamma > 0 for this run");
    if (const Extrema e = extrema(u); !(e.max_u >= 0.0 && e.min_u <= 0.0))
        result.warnings.push_back("initial data violates max u >= 0 >= min u; the L-infinity bound is monitored anyway");

    result.records.push_back(make_record(u, g));
    result.snapshots.push_back({0.0, u});

    const auto halt_on = [&](const DiagnosticsRecord& rec) {
        DetectionCause cause = check_blowup(rec, cfg.thresholds);
        if (!cfg.detect_blowup && cause != DetectionCause::non_finite) cause = DetectionCause::none;
        if (cause == DetectionCause::none) return false;
        result.report.detected = true;
        result.report.detected_t = rec.t;
        result.report.detection_cause = cause;
        result.status = status_for(cause);
        return true;
    };

    if (!halt_on(result.records.back())) {
        long next_snapshot = 1;
        while (u.time < p.t_final) {
            const double t = u.time;
            double dt = p.dt ? *p.dt : stable_dt(u, g, p);
            const double snapshot_t = static_cast<double>(next_snapshot) * cfg.snapshot_every;
            const double target = std::min(snapshot_t, p.t_final);
            const bool lands = t + dt >= target - 1e-12 * std::max(1.0, target);
            if (lands) dt = target - t;

            NodalField next;
            try {
                next = rk4_step(u, g, p, dt);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Instability) throw;
                result.status = RunStatus::numeric_failure;
                result.report.detected = true;
                result.report.detected_t = t + dt;
                result.report.detection_cause = DetectionCause::non_finite;
                result.failure_message = e.what();
                break;
            }
            next.time = lands ? target : t + dt;

            DiagnosticsRecord rec = make_record(next, g, &result.records.back());
            if (!rec.all_finite()) {
                // overflow in the norms: keep the last finite record and state
                result.status = RunStatus::numeric_failure;
                result.report.detected = true;
                result.report.detected_t = next.time;
                result.report.detection_cause = DetectionCause::non_finite;
                result.failure_message = "non-finite diagnostics at t = " + format_time(next.time);
                break;
            }
            result.records.push_back(rec);
            u = std::move(next);

            if (lands && same_time(u.time, snapshot_t)) {
                result.snapshots.push_back({snapshot_t, u});
                ++next_snapshot;
            }
            if (halt_on(result.records.back())) break;
        }
    }
    result.final_state = u;
    return result;
}

int exit_code(RunStatus status) noexcept {
    switch (status) {
    case RunStatus::completed: return 0;
    case RunStatus::blowup_detected: return 2;
    case RunStatus::resolution_lost: return 3;
    case RunStatus::numeric_failure: return 4;
    }
    return 4;
}

const char* to_string(RunStatus status) noexcept {
    switch (status) {
    case RunStatus::completed: return "completed";
    case RunStatus::blowup_detected: return "blowup_detected";
    case RunStatus::resolution_lost: return "resolution_lost";
    case RunStatus::numeric_failure: return "numeric_failure";
    }
    return "unknown";
}

const char* to_string(DetectionCause cause) noexcept {
    switch (cause) {
    case DetectionCause::none: return "none";
    case DetectionCause::slope_threshold: return "slope_threshold";
    case DetectionCause::non_finite: return "non_finite";
    case DetectionCause::resolution_loss: return "resolution_loss";
    }
    return "unknown";
}

}  // namespace fburgers
