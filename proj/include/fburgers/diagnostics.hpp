#pragma once

// Observables monitored along a run: mass, L2 / Sobolev norms, extrema,
// minimum slope, the time integral of max|u_x|, and a spectral
// resolution monitor. Also the blow-up prediction and detection policy.

#include <optional>

#include "fburgers/grid_spectral.hpp"

namespace fburgers {

struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double l2 = 0.0;
    double max_u = 0.0;
    double min_u = 0.0;
    double min_slope = 0.0;
    double bkm_integral = 0.0;   // int_0^t max|u_x| ds, trapezoid rule
    double h3 = 0.0;
    double tail_fraction = 0.0;
    double max_abs_slope = 0.0;  // integrand carried to the next accumulation; not serialized

    bool all_finite() const noexcept;
};

enum class DetectionCause { none, slope_threshold, non_finite, resolution_loss };

struct Thresholds {
    double slope_limit = 100.0;
    double tail_limit = 0.1;
};

struct BlowupReport {
    std::optional<double> predicted_t_star;
    bool detected = false;
    std::optional<double> detected_t;
    DetectionCause detection_cause = DetectionCause::none;
};

struct Extrema {
    double max_u;
    double min_u;
};

double mass(const NodalField& u, const Grid& g);
double l2_norm(const NodalField& u, const Grid& g);
double sobolev_norm(const NodalField& u, const Grid& g, double s);
Extrema extrema(const NodalField& u);
double min_slope(const NodalField& u, const Grid& g);

/// -1/m0 with m0 = min slope of f, or nothing when f has no negative slope.
/// Only meaningful for inviscid runs.
std::optional<double> predicted_blowup_time(const NodalField& f, const Grid& g);

/// Slope of the steepest characteristic, m0 / (1 + t m0).
/// Throws Error(SingularTime) when 1 + t m0 == 0.
double slope_closed_form(double m0, double t);

double bkm_accumulate(double prev_integral, double prev_norm, double new_norm, double dt);

/// Priority non_finite > slope_threshold > resolution_loss.
DetectionCause check_blowup(const DiagnosticsRecord& rec, const Thresholds& thresholds);

/// Energy share of |k| >= N/3 among the nonzero modes.
double tail_fraction(const SpectralField& s);

/// Full record for the field u at time u.time. With `previous` the BKM
/// integral is accumulated over [previous->t, u.time]; otherwise it starts at 0.
DiagnosticsRecord make_record(const NodalField& u, const Grid& g,
                              const DiagnosticsRecord* previous = nullptr);

}  // namespace fburgers
