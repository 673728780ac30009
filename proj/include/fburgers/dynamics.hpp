#pragma once

// Semi-discrete right-hand side F(u) = -u u_x - gamma Lambda^alpha u and its
// classical four-stage Runge-Kutta integrator.

#include <optional>

#include "fburgers/grid_spectral.hpp"

namespace fburgers {

struct SimParams {
    double gamma = 0.0;           // dissipation strength, >= 0
    double alpha = 1.0;           // fractional order, in (0, 2]
    std::optional<double> dt;     // fixed step; empty means automatic
    double t_final = 1.0;
    DealiasRule dealias = DealiasRule::off;
    bool linear_only = false;     // drop -u u_x
    bool nonlinear_only = false;  // drop the dissipative term

    /// Throws Error(Usage) naming the first offending field.
    void validate() const;

    double effective_gamma() const noexcept { return nonlinear_only ? 0.0 : gamma; }
};

NodalField rhs(const NodalField& u, const Grid& g, const SimParams& p);

/// One RK4 step of size dt. Non-finite stages raise Error(Instability) with
/// the stage index (1..4); a non-finite update reports stage 5.
NodalField rk4_step(const NodalField& u, const Grid& g, const SimParams& p, double dt);

struct StepLimits {
    double advective = 0.5;
    double diffusive = 0.5;
    double epsilon = 1e-12;
};

/// min(C_adv / (max|u| k_max + eps), C_diff / (gamma k_max^alpha + eps)),
/// k_max = N/2.
double stable_dt(const NodalField& u, const Grid& g, const SimParams& p, const StepLimits& limits = {});

}  // namespace fburgers
