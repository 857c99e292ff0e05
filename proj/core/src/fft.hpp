#pragma once

#include <span>
#include <vector>

namespace fim::detail {

// Linear convolution, output length a.size()+b.size()-1. FFTW-backed with
// plans created under FFTW_ESTIMATE so results are reproducible run to run.
std::vector<double> convolve(std::span<const double> a, std::span<const double> b);

}  // namespace fim::detail
