#include "fburgers/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fburgers/error.hpp"

namespace fburgers {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double weighted_energy(const SpectralField& s, double order) {
    double sum = 0.0;
    for (int k = s.min_wavenumber(); k <= s.max_wavenumber(); ++k) {
        const double w = (order == 0.0) ? 1.0 : std::pow(1.0 + static_cast<double>(k) * k, order);
        sum += w * std::norm(s[k]);
    }
    return sum;
}

}  // namespace

bool DiagnosticsRecord::all_finite() const noexcept {
    for (double v : {t, mass, l2, max_u, min_u, min_slope, bkm_integral, h3, tail_fraction})
        if (!std::isfinite(v)) return false;
    return true;
}

double mass(const NodalField& u, const Grid& g) { return two_pi * forward_dft(u, g)[0].real(); }

double l2_norm(const NodalField& u, const Grid& g) { return sobolev_norm(u, g, 0.0); }

double sobolev_norm(const NodalField& u, const Grid& g, double s) {
    if (!(s >= 0.0)) throw Error(ErrorKind::InvalidInput, "Sobolev order must be >= 0");
    return std::sqrt(two_pi * weighted_energy(forward_dft(u, g), s));
}

Extrema extrema(const NodalField& u) {
    if (u.values.empty()) throw Error(ErrorKind::InvalidInput, "extrema of an empty field");
    const auto [lo, hi] = std::minmax_element(u.values.begin(), u.values.end());
    return {*hi, *lo};
}

double min_slope(const NodalField& u, const Grid& g) {
    const NodalField du = nodal_derivative(u, g);
    return *std::min_element(du.values.begin(), du.values.end());
}

std::optional<double> predicted_blowup_time(const NodalField& f, const Grid& g) {
    const double m0 = min_slope(f, g);
    if (m0 < 0.0) return -1.0 / m0;
    return std::nullopt;
}

double slope_closed_form(double m0, double t) {
    const double denom = 1.0 + t * m0;
    if (denom == 0.0) throw Error(ErrorKind::SingularTime, "slope law is singular at t = -1/m0");
    return m0 / denom;
}

double bkm_accumulate(double prev_integral, double prev_norm, double new_norm, double dt) {
    return prev_integral + dt * 0.5 * (prev_norm + new_norm);
}

DetectionCause check_blowup(const DiagnosticsRecord& rec, const Thresholds& thresholds) {
    if (!rec.all_finite()) return DetectionCause::non_finite;
    if (std::abs(rec.min_slope) > thresholds.slope_limit) return DetectionCause::slope_threshold;
    if (rec.tail_fraction > thresholds.tail_limit) return DetectionCause::resolution_loss;
    return DetectionCause::none;
}

double tail_fraction(const SpectralField& s) {
    double tail = 0.0, total = 0.0;
    for (int k = s.min_wavenumber(); k <= s.max_wavenumber(); ++k) {
        if (k == 0) continue;
        const double e = std::norm(s[k]);
        total += e;
        if (3 * std::abs(k) >= s.size()) tail += e;
    }
    return tail / (total + 1e-300);
}

DiagnosticsRecord make_record(const NodalField& u, const Grid& g, const DiagnosticsRecord* previous) {
    const SpectralField s = forward_dft(u, g);
    const NodalField du = inverse_dft(spectral_derivative(s), g);

    DiagnosticsRecord rec;
    rec.t = u.time;
    rec.mass = two_pi * s[0].real();
    rec.l2 = std::sqrt(two_pi * weighted_energy(s, 0.0));
    rec.h3 = std::sqrt(two_pi * weighted_energy(s, 3.0));
    const Extrema ext = extrema(u);
    rec.max_u = ext.max_u;
    rec.min_u = ext.min_u;
    rec.min_slope = *std::min_element(du.values.begin(), du.values.end());
    for (double v : du.values) rec.max_abs_slope = std::max(rec.max_abs_slope, std::abs(v));
    rec.tail_fraction = tail_fraction(s);
    if (previous)
        rec.bkm_integral =
            bkm_accumulate(previous->bkm_integral, previous->max_abs_slope, rec.max_abs_slope, rec.t - previous->t);
    return rec;
}

}  // namespace fburgers
