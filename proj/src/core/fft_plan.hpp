#pragma once

#include <complex>
#include <memory>
#include <span>

#include <fftw3.h>

namespace fburgers::detail {

/// Pair of length-N complex FFTW plans (forward and backward, unnormalized).
/// Plans are built once per N and shared; executing them is thread-safe,
/// building them is serialized by plan_for().
class FftPlan {
public:
    explicit FftPlan(int n);
    ~FftPlan();
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    int size() const noexcept { return n_; }

    // out[k] = sum_j in[j] e^{-2 pi i jk/N}
    void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;
    // out[j] = sum_k in[k] e^{+2 pi i jk/N}
    void backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;

private:
    int n_;
    fftw_plan forward_;
    fftw_plan backward_;
};

std::shared_ptr<const FftPlan> plan_for(int n);

}  // namespace fburgers::detail
