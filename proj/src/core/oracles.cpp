#include "fburgers/oracles.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "fburgers/error.hpp"

namespace fburgers {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int gaussian_images = 4;
constexpr int extreme_samples = 1 << 16;
constexpr double residual_tolerance = 1e-12;

double unit_interval(std::uint64_t r) { return static_cast<double>(r >> 11) * 0x1.0p-53; }

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
    T value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw Error(ErrorKind::Usage, "invalid " + what + " '" + text + "' in initial condition", "ic");
    return value;
}

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

}  // namespace

InitialCondition InitialCondition::neg_sine() {
    InitialCondition ic;
    ic.kind_ = Kind::neg_sine;
    ic.param_ = 1.0;
    ic.cache_extremes();
    return ic;
}

InitialCondition InitialCondition::scaled_neg_sine(double amplitude) {
    if (!std::isfinite(amplitude)) throw Error(ErrorKind::InvalidInput, "amplitude must be finite");
    InitialCondition ic;
    ic.kind_ = Kind::scaled_neg_sine;
    ic.param_ = amplitude;
    ic.cache_extremes();
    return ic;
}

InitialCondition InitialCondition::gaussian_bump(double width) {
    if (!(width > 0.0) || !std::isfinite(width))
        throw Error(ErrorKind::InvalidInput, "gaussian width must be > 0");
    InitialCondition ic;
    ic.kind_ = Kind::gaussian_bump;
    ic.param_ = width;
    ic.cache_extremes();
    return ic;
}

InitialCondition InitialCondition::random_band(int max_mode, std::uint64_t seed) {
    if (max_mode < 0) throw Error(ErrorKind::InvalidInput, "random band max mode must be >= 0");
    InitialCondition ic;
    ic.kind_ = Kind::random_band;
    ic.max_mode_ = max_mode;
    ic.seed_ = seed;
    std::mt19937_64 rng(seed);
    for (int k = 1; k <= max_mode; ++k) {
        ic.cos_amp_.push_back(2.0 * unit_interval(rng()) - 1.0);
        ic.sin_amp_.push_back(2.0 * unit_interval(rng()) - 1.0);
    }
    ic.cache_extremes();
    return ic;
}

InitialCondition InitialCondition::parse(const std::string& spec) {
    const auto parts = split(spec, ':');
    const std::string head = parts.empty() ? std::string{} : parts.front();
    if (head == "neg-sine" && parts.size() == 1) return neg_sine();
    if (head == "scaled-neg-sine" && parts.size() == 2)
        return scaled_neg_sine(parse_number<double>(parts[1], "amplitude"));
    if (head == "gaussian" && parts.size() == 2) {
        const double w = parse_number<double>(parts[1], "width");
        if (!(w > 0.0)) throw Error(ErrorKind::Usage, "gaussian width must be > 0", "ic");
        return gaussian_bump(w);
    }
    if (head == "random" && parts.size() == 3) {
        const int kmax = parse_number<int>(parts[1], "max mode");
        if (kmax < 0) throw Error(ErrorKind::Usage, "random max mode must be >= 0", "ic");
        return random_band(kmax, parse_number<std::uint64_t>(parts[2], "seed"));
    }
    throw Error(ErrorKind::Usage,
                "unknown initial condition '" + spec +
                    "' (expected neg-sine | scaled-neg-sine:a | gaussian:w | random:kmax:seed)",
                "ic");
}

std::string InitialCondition::describe() const {
    switch (kind_) {
    case Kind::neg_sine: return "neg-sine";
    case Kind::scaled_neg_sine: return "scaled-neg-sine:" + shortest(param_);
    case Kind::gaussian_bump: return "gaussian:" + shortest(param_);
    case Kind::random_band: return "random:" + std::to_string(max_mode_) + ':' + std::to_string(seed_);
    }
    return {};
}

double InitialCondition::operator()(double x) const {
    switch (kind_) {
    case Kind::neg_sine: return -std::sin(x);
    case Kind::scaled_neg_sine: return -param_ * std::sin(x);
    case Kind::gaussian_bump: {
        double sum = 0.0;
        for (int m = -gaussian_images; m <= gaussian_images; ++m) {
            const double d = x - 2.0 * pi * m;
            sum += std::exp(-d * d / (2.0 * param_ * param_));
        }
        return sum;
    }
    case Kind::random_band: {
        double sum = 0.0;
        for (int k = 1; k <= max_mode_; ++k) {
            const auto i = static_cast<std::size_t>(k - 1);
            sum += (cos_amp_[i] * std::cos(k * x) + sin_amp_[i] * std::sin(k * x)) / k;
        }
        return sum;
    }
    }
    return 0.0;
}

double InitialCondition::derivative(double x) const {
    switch (kind_) {
    case Kind::neg_sine: return -std::cos(x);
    case Kind::scaled_neg_sine: return -param_ * std::cos(x);
    case Kind::gaussian_bump: {
        double sum = 0.0;
        const double w2 = param_ * param_;
        for (int m = -gaussian_images; m <= gaussian_images; ++m) {
            const double d = x - 2.0 * pi * m;
            sum += -d / w2 * std::exp(-d * d / (2.0 * w2));
        }
        return sum;
    }
    case Kind::random_band: {
        double sum = 0.0;
        for (int k = 1; k <= max_mode_; ++k) {
            const auto i = static_cast<std::size_t>(k - 1);
            sum += -cos_amp_[i] * std::sin(k * x) + sin_amp_[i] * std::cos(k * x);
        }
        return sum;
    }
    }
    return 0.0;
}

NodalField InitialCondition::sample(const Grid& g) const {
    NodalField f;
    f.values.reserve(static_cast<std::size_t>(g.size()));
    for (double x : g.nodes()) f.values.push_back((*this)(x));
    return f;
}

void InitialCondition::cache_extremes() {
    if (kind_ == Kind::neg_sine || kind_ == Kind::scaled_neg_sine) {
        const double a = std::abs(param_);
        min_value_ = -a;
        max_value_ = a;
        min_derivative_ = -a;
        return;
    }
    min_value_ = max_value_ = (*this)(-pi);
    min_derivative_ = derivative(-pi);
    for (int j = 1; j < extreme_samples; ++j) {
        const double x = -pi + 2.0 * pi * j / extreme_samples;
        const double v = (*this)(x);
        min_value_ = std::min(min_value_, v);
        max_value_ = std::max(max_value_, v);
        min_derivative_ = std::min(min_derivative_, derivative(x));
    }
}

double InitialCondition::min_value() const { return min_value_; }
double InitialCondition::max_value() const { return max_value_; }
double InitialCondition::min_derivative() const { return min_derivative_; }

double InitialCondition::shock_time() const {
    return min_derivative_ < 0.0 ? -1.0 / min_derivative_ : std::numeric_limits<double>::infinity();
}

double characteristics_solution(const InitialCondition& f, double x, double t) {
    if (!(t >= 0.0)) throw Error(ErrorKind::InvalidInput, "characteristics time must be >= 0");
    if (t >= f.shock_time())
        throw Error(ErrorKind::Domain, "characteristics requested at or after the shock time");
    if (t == 0.0) return f(x);

    const auto residual = [&](double u) { return u - f(x - u * t); };

    // Damped fixed point: u <- (1 - w) u + w f(x - u t).
    constexpr double damping = 0.5;
    double u = f(x);
    for (int it = 0; it < 400; ++it) {
        if (std::abs(residual(u)) <= residual_tolerance) return u;
        u = (1.0 - damping) * u + damping * f(x - u * t);
    }

    // residual(u) is strictly increasing before the shock, and its root lies
    // in the range of f; the sampled range is widened to be a safe bracket.
    const double margin = 1e-6 * (1.0 + f.max_value() - f.min_value());
    double lo = f.min_value() - margin;
    double hi = f.max_value() + margin;
    if (residual(lo) > 0.0 || residual(hi) < 0.0)
        throw Error(ErrorKind::Convergence, "characteristics root not bracketed");
    double best = u;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (std::abs(residual(mid)) < std::abs(residual(best))) best = mid;
        if (mid <= lo || mid >= hi) break;
        (residual(mid) < 0.0 ? lo : hi) = mid;
    }
    if (std::abs(residual(best)) > residual_tolerance)
        throw Error(ErrorKind::Convergence, "characteristics iteration did not reach its residual");
    return best;
}

SpectralField linear_decay_solution(const SpectralField& s0, double t, double gamma, double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw Error(ErrorKind::InvalidInput, "fractional order must lie in (0, 2]");
    SpectralField out = s0;
    for (int k = s0.min_wavenumber(); k <= s0.max_wavenumber(); ++k)
        out[k] *= std::exp(-gamma * std::pow(std::abs(static_cast<double>(k)), alpha) * t);
    return out;
}

}  // namespace fburgers
