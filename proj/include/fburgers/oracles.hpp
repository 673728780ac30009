#pragma once

// Initial conditions and the analytic reference solutions the solver is
// checked against: characteristics for inviscid data before the shock, and
// exact modewise decay for the linear dissipative problem.

#include <cstdint>
#include <string>
#include <vector>

#include "fburgers/grid_spectral.hpp"

namespace fburgers {

/// 2pi-periodic smooth initial datum.
///
///   neg_sine          f(x) = -sin x
///   scaled_neg_sine   f(x) = -a sin x
///   gaussian_bump     f(x) = sum_{m=-4..4} exp(-(x - 2 pi m)^2 / (2 w^2))
///   random_band       f(x) = sum_{k=1..K} (a_k cos kx + b_k sin kx) / k
///
/// random_band draws a_1, b_1, a_2, b_2, ... in that order from
/// std::mt19937_64(seed), mapping each 64-bit output r to
/// 2 * (r >> 11) * 2^-53 - 1, a uniform value in [-1, 1).
class InitialCondition {
public:
    enum class Kind { neg_sine, scaled_neg_sine, gaussian_bump, random_band };

    static InitialCondition neg_sine();
    static InitialCondition scaled_neg_sine(double amplitude);
    static InitialCondition gaussian_bump(double width);
    static InitialCondition random_band(int max_mode, std::uint64_t seed);

    /// Parses the CLI spelling: neg-sine | scaled-neg-sine:a | gaussian:w | random:kmax:seed.
    static InitialCondition parse(const std::string& spec);

    Kind kind() const noexcept { return kind_; }
    double parameter() const noexcept { return param_; }
    int max_mode() const noexcept { return max_mode_; }
    std::uint64_t seed() const noexcept { return seed_; }

    double operator()(double x) const;
    double derivative(double x) const;
    NodalField sample(const Grid& g) const;

    /// Extremes of f and f' estimated on a fine uniform sampling (exact for
    /// the sine kinds).
    double min_value() const;
    double max_value() const;
    double min_derivative() const;

    /// -1 / min f', or +infinity when f' >= 0 everywhere.
    double shock_time() const;

    /// Inverse of parse().
    std::string describe() const;

private:
    InitialCondition() = default;
    void cache_extremes();

    Kind kind_ = Kind::neg_sine;
    double param_ = 1.0;
    int max_mode_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<double> cos_amp_, sin_amp_;  // random_band, index k-1
    double min_value_ = -1.0, max_value_ = 1.0, min_derivative_ = -1.0;
};

/// u solving u = f(x - u t). Damped fixed-point iteration from f(x), with a
/// bisection fallback on [min f, max f]; the returned value satisfies
/// |u - f(x - u t)| <= 1e-12. Throws Error(Domain) when t is at or past the
/// shock time and Error(Convergence) if the residual cannot be met.
double characteristics_solution(const InitialCondition& f, double x, double t);

/// Each coefficient scaled by exp(-gamma |k|^alpha t).
SpectralField linear_decay_solution(const SpectralField& s0, double t, double gamma, double alpha);

}  // namespace fburgers
