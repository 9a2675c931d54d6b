#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace sts::detail {
namespace {

// FFTW's planner is not thread-safe; plan execution is.
std::mutex planner_mutex;

}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
    std::vector<std::complex<double>> in(x), out(x.size());
    if (x.empty()) return out;
    auto* src = reinterpret_cast<fftw_complex*>(in.data());
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(x.size()), src, dst, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace sts::detail
