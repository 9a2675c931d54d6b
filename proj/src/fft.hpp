#pragma once

#include <complex>
#include <vector>

namespace sts::detail {

/// Forward DFT, F_j = sum_k x_k e^{-2 pi i jk/n}, for any n >= 1 (FFTW).
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

}  // namespace sts::detail
