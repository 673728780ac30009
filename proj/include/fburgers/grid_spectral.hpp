#pragma once

// Discrete torus, discrete Fourier transforms and the two spectral
// multipliers (derivative, fractional Laplacian) used by the solver.
//
// Conventions:
//   nodes        x_j = pi (2j - N) / N,            j = 0 .. N-1
//   forward      u~_k = (1/N) sum_j u(x_j) e^{-i k x_j}
//   inverse      u(x_l) = sum_k u~_k e^{+i k x_l},  k = -N/2 .. N/2-1

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace fburgers {

namespace detail {
class FftPlan;
}

/// Uniform periodic grid on [-pi, pi) with an even number of nodes.
class Grid {
public:
    /// Throws Error(InvalidInput) unless n is even and n >= 4.
    explicit Grid(int n);

    int size() const noexcept { return n_; }
    double spacing() const noexcept;
    double node(int j) const { return nodes_.at(static_cast<std::size_t>(j)); }
    std::span<const double> nodes() const noexcept { return nodes_; }

    int min_wavenumber() const noexcept { return -n_ / 2; }
    int max_wavenumber() const noexcept { return n_ / 2 - 1; }

    const detail::FftPlan& plan() const noexcept { return *plan_; }

private:
    int n_;
    std::vector<double> nodes_;
    std::shared_ptr<const detail::FftPlan> plan_;
};

Grid make_grid(int n);

/// Nodal samples of a real field on a grid, tagged with a simulation time.
struct NodalField {
    std::vector<double> values;
    double time = 0.0;

    std::size_t size() const noexcept { return values.size(); }
    bool all_finite() const noexcept;
};

/// Complex coefficients u~_k for k = -N/2 .. N/2-1, addressed by wavenumber.
class SpectralField {
public:
    explicit SpectralField(int n);

    int size() const noexcept { return n_; }
    int min_wavenumber() const noexcept { return -n_ / 2; }
    int max_wavenumber() const noexcept { return n_ / 2 - 1; }

    std::complex<double>& operator[](int k) noexcept { return coeffs_[slot(k)]; }
    const std::complex<double>& operator[](int k) const noexcept { return coeffs_[slot(k)]; }

    /// Range-checked access; throws Error(InvalidInput) for |k| out of band.
    std::complex<double>& at(int k);
    const std::complex<double>& at(int k) const;

    /// Storage in FFT order (slot k mod N).
    std::span<std::complex<double>> raw() noexcept { return coeffs_; }
    std::span<const std::complex<double>> raw() const noexcept { return coeffs_; }

private:
    std::size_t slot(int k) const noexcept {
        return static_cast<std::size_t>(k < 0 ? k + n_ : k);
    }

    int n_;
    std::vector<std::complex<double>> coeffs_;
};

enum class DealiasRule { off, two_thirds };

SpectralField forward_dft(const NodalField& u, const Grid& g);

/// Imaginary residue above 1e-12 * sum_k |u~_k| raises Error(SymmetryViolation).
/// The result carries time 0; callers restamp it.
NodalField inverse_dft(const SpectralField& s, const Grid& g);

/// ik u~_k, with the Nyquist coefficient k = -N/2 set to zero.
SpectralField spectral_derivative(const SpectralField& s);

/// |k|^alpha u~_k for 0 < alpha <= 2.
SpectralField fractional_laplacian(const SpectralField& s, double alpha);

/// two_thirds zeroes every coefficient with |k| > N/3.
SpectralField dealias(const SpectralField& s, DealiasRule rule);

/// Nodal image of D_N u.
NodalField nodal_derivative(const NodalField& u, const Grid& g);

}  // namespace fburgers
