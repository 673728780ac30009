#include "fft_plan.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace fburgers::detail {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

fftw_complex* as_fftw(const std::complex<double>* p) {
    // FFTW never writes through the input pointer of an out-of-place plan.
    return reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(p));
}

}  // namespace

FftPlan::FftPlan(int n) : n_(n) {
    std::vector<std::complex<double>> in(static_cast<std::size_t>(n)), out(in.size());
    // FFTW_ESTIMATE keeps plans (and therefore results) reproducible run to run.
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward_ = fftw_plan_dft_1d(n, as_fftw(in.data()), as_fftw(out.data()), FFTW_FORWARD, flags);
    backward_ = fftw_plan_dft_1d(n, as_fftw(in.data()), as_fftw(out.data()), FFTW_BACKWARD, flags);
}

FftPlan::~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
}

void FftPlan::forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const {
    fftw_execute_dft(forward_, as_fftw(in.data()), as_fftw(out.data()));
}

void FftPlan::backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const {
    fftw_execute_dft(backward_, as_fftw(in.data()), as_fftw(out.data()));
}

std::shared_ptr<const FftPlan> plan_for(int n) {
    // Mutex is constructed before the cache so it outlives it at exit.
    std::lock_guard lock(planner_mutex());
    static std::map<int, std::shared_ptr<const FftPlan>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const FftPlan>(n);
    return slot;
}

}  // namespace fburgers::detail
