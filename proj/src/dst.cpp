#include "cubicwave/dst.hpp"

#include "cubicwave/constants.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace cubicwave {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

std::vector<double> dst_i(const std::vector<double>& in) {
    const std::size_t n = in.size();
    if (n == 0) return {};
    double* buf_in = static_cast<double*>(fftw_malloc(sizeof(double) * n));
    double* buf_out = static_cast<double*>(fftw_malloc(sizeof(double) * n));
    if (!buf_in || !buf_out) {
        if (buf_in) fftw_free(buf_in);
        if (buf_out) fftw_free(buf_out);
        throw std::bad_alloc();
    }
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lk(fftw_mutex());
        plan = fftw_plan_r2r_1d(static_cast<int>(n), buf_in, buf_out,
                                FFTW_RODFT00, FFTW_ESTIMATE);
    }
    if (!plan) {
        fftw_free(buf_in);
        fftw_free(buf_out);
        throw std::runtime_error("dst_i: FFTW plan creation failed");
    }
    for (std::size_t i = 0; i < n; ++i) buf_in[i] = in[i];
    fftw_execute(plan);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = buf_out[i];
    {
        std::lock_guard<std::mutex> lk(fftw_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf_in);
    fftw_free(buf_out);
    return out;
}

SpectralSamples dst_radial_fourier(const std::vector<double>& psi, double h,
                                   std::size_t m_keep) {
    if (psi.empty()) throw std::invalid_argument("dst_radial_fourier: empty input");
    if (!(h > 0)) throw std::invalid_argument("dst_radial_fourier: h must be > 0");
    const std::size_t n = psi.size();
    const double R = static_cast<double>(n + 1) * h;
    const double drho = kPi / R;
    std::vector<double> transformed = dst_i(psi);

    const std::size_t m = (m_keep == 0 || m_keep > n) ? n : m_keep;
    SpectralSamples out;
    out.drho = drho;
    out.rhos.resize(m);
    out.fhat.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double rho = drho * static_cast<double>(k + 1);
        out.rhos[k] = rho;
        out.fhat[k] = (4.0 * kPi / rho) * (0.5 * h) * transformed[k];
    }
    return out;
}

std::size_t next_smooth_size(std::size_t n) {
    if (n <= 1) return 1;
    for (std::size_t cand = n;; ++cand) {
        std::size_t m = cand;
        while (m % 2 == 0) m /= 2;
        while (m % 3 == 0) m /= 3;
        while (m % 5 == 0) m /= 5;
        if (m == 1) return cand;
        // 5-smooth numbers have gaps O(n / log n) at worst in this range;
        // the scan is cheap for the sizes used here (≤ ~10^7).
    }
}

} // namespace cubicwave
