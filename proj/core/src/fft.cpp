#include "fft.hpp"

#include <fftw3.h>

#include <complex>
#include <cstring>
#include <map>
#include <mutex>

namespace fim::detail {

namespace {

// Smallest 5-smooth number >= n. FFTW handles these sizes in O(n log n).
std::size_t next_fast_size(std::size_t n) {
    while (true) {
        std::size_t m = n;
        while (m % 2 == 0) m /= 2;
        while (m % 3 == 0) m /= 3;
        while (m % 5 == 0) m /= 5;
        if (m == 1) return n;
        ++n;
    }
}

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

// Plan creation is not thread-safe; execution on caller buffers is.
std::mutex plan_mutex;

PlanPair& plans_for(std::size_t n, double* re, fftw_complex* cx) {
    static std::map<std::size_t, PlanPair> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        PlanPair p;
        p.fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), re, cx, FFTW_ESTIMATE);
        p.inv = fftw_plan_dft_c2r_1d(static_cast<int>(n), cx, re, FFTW_ESTIMATE);
        it = cache.emplace(n, p).first;
    }
    return it->second;
}

}  // namespace

std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t n = next_fast_size(out_len);
    const std::size_t nc = n / 2 + 1;

    double* ra = fftw_alloc_real(n);
    double* rb = fftw_alloc_real(n);
    fftw_complex* ca = fftw_alloc_complex(nc);
    fftw_complex* cb = fftw_alloc_complex(nc);

    std::memset(ra, 0, n * sizeof(double));
    std::memset(rb, 0, n * sizeof(double));
    std::memcpy(ra, a.data(), a.size() * sizeof(double));
    std::memcpy(rb, b.data(), b.size() * sizeof(double));

    fftw_plan fwd, inv;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        PlanPair& p = plans_for(n, ra, ca);
        fwd = p.fwd;
        inv = p.inv;
    }
    fftw_execute_dft_r2c(fwd, ra, ca);
    fftw_execute_dft_r2c(fwd, rb, cb);

    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < nc; ++k) {
        const std::complex<double> pa(ca[k][0], ca[k][1]);
        const std::complex<double> pb(cb[k][0], cb[k][1]);
        const std::complex<double> prod = pa * pb * scale;
        ca[k][0] = prod.real();
        ca[k][1] = prod.imag();
    }
    fftw_execute_dft_c2r(inv, ca, ra);

    std::vector<double> out(ra, ra + out_len);
    fftw_free(ra);
    fftw_free(rb);
    fftw_free(ca);
    fftw_free(cb);
    return out;
}

}  // namespace fim::detail
