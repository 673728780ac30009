#include "fburgers/grid_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fburgers/error.hpp"
#include "fft_plan.hpp"

namespace fburgers {

namespace {

// e^{-i k x_j} = (-1)^k e^{-2 pi i jk/N} because x_j = -pi + 2 pi j/N.
double parity(std::size_t slot) { return (slot % 2 == 0) ? 1.0 : -1.0; }

void require_grid_match(std::size_t got, const Grid& g) {
    if (got != static_cast<std::size_t>(g.size()))
        throw Error(ErrorKind::InvalidInput, "field length " + std::to_string(got) +
                                                 " does not match grid size " + std::to_string(g.size()));
}

}  // namespace

Grid::Grid(int n) : n_(n) {
    if (n < 4 || n % 2 != 0)
        throw Error(ErrorKind::InvalidInput, "grid size must be even and >= 4, got " + std::to_string(n));
    nodes_.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        nodes_[static_cast<std::size_t>(j)] = std::numbers::pi * (2.0 * j - n) / n;
    plan_ = detail::plan_for(n);
}

double Grid::spacing() const noexcept { return 2.0 * std::numbers::pi / n_; }

Grid make_grid(int n) { return Grid(n); }

bool NodalField::all_finite() const noexcept {
    return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

SpectralField::SpectralField(int n) : n_(n), coeffs_(static_cast<std::size_t>(n)) {
    if (n < 2 || n % 2 != 0)
        throw Error(ErrorKind::InvalidInput, "spectral size must be even, got " + std::to_string(n));
}

std::complex<double>& SpectralField::at(int k) {
    if (k < min_wavenumber() || k > max_wavenumber())
        throw Error(ErrorKind::InvalidInput, "wavenumber " + std::to_string(k) + " outside band");
    return (*this)[k];
}

const std::complex<double>& SpectralField::at(int k) const {
    return const_cast<SpectralField*>(this)->at(k);
}

SpectralField forward_dft(const NodalField& u, const Grid& g) {
    require_grid_match(u.size(), g);
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<std::complex<double>> in(u.values.begin(), u.values.end());
    SpectralField s(g.size());
    auto out = s.raw();
    g.plan().forward(in, out);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) out[i] *= parity(i) * scale;

    // The input is real, so the exact transform is conjugate-symmetric.
    // Restore that to the last bit; multipliers applied later then keep it
    // exactly instead of amplifying FFT round-off by |k|^alpha.
    out[0] = out[0].real();
    out[n / 2] = out[n / 2].real();
    for (std::size_t i = 1; i < n / 2; ++i) {
        const std::complex<double> avg = 0.5 * (out[i] + std::conj(out[n - i]));
        out[i] = avg;
        out[n - i] = std::conj(avg);
    }
    return s;
}

NodalField inverse_dft(const SpectralField& s, const Grid& g) {
    require_grid_match(static_cast<std::size_t>(s.size()), g);
    const auto n = static_cast<std::size_t>(g.size());
    const auto coeffs = s.raw();
    std::vector<std::complex<double>> in(n), out(n);
    double magnitude = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        in[i] = parity(i) * coeffs[i];
        magnitude += std::abs(coeffs[i]);
    }
    g.plan().backward(in, out);

    NodalField u;
    u.values.resize(n);
    double residue = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        u.values[i] = out[i].real();
        residue = std::max(residue, std::abs(out[i].imag()));
    }
    if (residue > 1e-12 * magnitude)
        throw Error(ErrorKind::SymmetryViolation,
                    "coefficients are not conjugate-symmetric (relative imaginary residue " +
                        std::to_string(residue / magnitude) + ")");
    return u;
}

SpectralField spectral_derivative(const SpectralField& s) {
    SpectralField d(s.size());
    for (int k = s.min_wavenumber() + 1; k <= s.max_wavenumber(); ++k)
        d[k] = std::complex<double>(0.0, static_cast<double>(k)) * s[k];
    return d;
}

SpectralField fractional_laplacian(const SpectralField& s, double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw Error(ErrorKind::InvalidInput, "fractional order must lie in (0, 2], got " + std::to_string(alpha));
    SpectralField out(s.size());
    for (int k = s.min_wavenumber(); k <= s.max_wavenumber(); ++k) {
        if (k == 0) continue;
        out[k] = std::pow(std::abs(static_cast<double>(k)), alpha) * s[k];
    }
    return out;
}

SpectralField dealias(const SpectralField& s, DealiasRule rule) {
    SpectralField out = s;
    if (rule == DealiasRule::off) return out;
    // |k| > N/3  <=>  3|k| > N, kept in integers.
    for (int k = s.min_wavenumber(); k <= s.max_wavenumber(); ++k)
        if (3 * std::abs(k) > s.size()) out[k] = 0.0;
    return out;
}

NodalField nodal_derivative(const NodalField& u, const Grid& g) {
    NodalField d = inverse_dft(spectral_derivative(forward_dft(u, g)), g);
    d.time = u.time;
    return d;
}

}  // namespace fburgers
