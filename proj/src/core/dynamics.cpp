#include "fburgers/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fburgers/error.hpp"

namespace fburgers {

namespace {

// y + a x, elementwise
NodalField axpy(const NodalField& y, double a, const NodalField& x) {
    NodalField out;
    out.values.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out.values[i] = y.values[i] + a * x.values[i];
    return out;
}

void require_finite_stage(const NodalField& k, int stage) {
    if (!k.all_finite())
        throw Error(ErrorKind::Instability, "non-finite value in RK4 stage " + std::to_string(stage), {}, stage);
}

}  // namespace

void SimParams::validate() const {
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw Error(ErrorKind::Usage, "gamma must be a finite value >= 0", "gamma");
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw Error(ErrorKind::Usage, "alpha must lie in (0, 2]", "alpha");
    if (!(t_final > 0.0) || !std::isfinite(t_final))
        throw Error(ErrorKind::Usage, "t-final must be > 0", "t-final");
    if (dt && (!(*dt > 0.0) || !std::isfinite(*dt)))
        throw Error(ErrorKind::Usage, "dt must be > 0 or \"auto\"", "dt");
    if (linear_only && nonlinear_only)
        throw Error(ErrorKind::Usage, "linear-only and nonlinear-only are exclusive", "linear-only");
}

NodalField rhs(const NodalField& u, const Grid& g, const SimParams& p) {
    if (u.size() != static_cast<std::size_t>(g.size()))
        throw Error(ErrorKind::InvalidInput, "field does not match grid");
    if (!u.all_finite()) throw Error(ErrorKind::InvalidState, "rhs called on a non-finite field");

    const SpectralField s = forward_dft(u, g);
    SpectralField tendency(g.size());

    if (!p.linear_only) {
        const SpectralField sd = dealias(s, p.dealias);
        const NodalField du = inverse_dft(spectral_derivative(sd), g);
        const NodalField ud = (p.dealias == DealiasRule::off) ? u : inverse_dft(sd, g);
        NodalField product;
        product.values.resize(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) product.values[j] = -ud.values[j] * du.values[j];
        tendency = dealias(forward_dft(product, g), p.dealias);
        // Analytically the mean of -u u_x = -(u^2/2)_x vanishes; pin it so
        // round-off in the collocation product cannot move the mass.
        tendency[0] = 0.0;
    }

    const double gamma = p.effective_gamma();
    if (gamma > 0.0) {
        const SpectralField damping = fractional_laplacian(s, p.alpha);
        for (int k = s.min_wavenumber(); k <= s.max_wavenumber(); ++k) tendency[k] -= gamma * damping[k];
    }

    NodalField f = inverse_dft(tendency, g);
    f.time = u.time;
    return f;
}

NodalField rk4_step(const NodalField& u, const Grid& g, const SimParams& p, double dt) {
    if (!(dt > 0.0)) throw Error(ErrorKind::InvalidInput, "time step must be positive");
    if (!u.all_finite()) throw Error(ErrorKind::InvalidState, "rk4_step called on a non-finite field");

    // F is autonomous, so the stage times t + dt/2, t + dt are not evaluated.
    const NodalField k1 = rhs(u, g, p);
    require_finite_stage(k1, 1);
    const NodalField k2 = rhs(axpy(u, 0.5 * dt, k1), g, p);
    require_finite_stage(k2, 2);
    const NodalField k3 = rhs(axpy(u, 0.5 * dt, k2), g, p);
    require_finite_stage(k3, 3);
    const NodalField k4 = rhs(axpy(u, dt, k3), g, p);
    require_finite_stage(k4, 4);

    NodalField next;
    next.values.resize(u.size());
    const double w = dt / 6.0;
    for (std::size_t j = 0; j < u.size(); ++j)
        next.values[j] = u.values[j] +
                         w * (k1.values[j] + 2.0 * k2.values[j] + 2.0 * k3.values[j] + k4.values[j]);
    require_finite_stage(next, 5);
    next.time = u.time + dt;
    return next;
}

double stable_dt(const NodalField& u, const Grid& g, const SimParams& p, const StepLimits& limits) {
    double umax = 0.0;
    for (double v : u.values) umax = std::max(umax, std::abs(v));
    const double kmax = g.size() / 2.0;
    const double advective = limits.advective / (umax * kmax + limits.epsilon);
    const double diffusive = limits.diffusive / (p.effective_gamma() * std::pow(kmax, p.alpha) + limits.epsilon);
    return std::min(advective, diffusive);
}

}  // namespace fburgers
