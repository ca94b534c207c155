#include "nsol/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace nsol {

namespace {
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

struct FftEngine::Impl {
    fftw_plan fwd = nullptr, bwd = nullptr, r2c = nullptr, c2r = nullptr;
    cvec cbuf;  // planning buffer, also usable as scratch by the owner thread
    rvec rbuf;
    cvec hbuf;
};

FftEngine::FftEngine(int n) : n_(n), impl_(std::make_unique<Impl>()) {
    impl_->cbuf.resize(size());
    impl_->rbuf.resize(size());
    impl_->hbuf.resize(half_size());
    auto* c = reinterpret_cast<fftw_complex*>(impl_->cbuf.data());
    auto* h = reinterpret_cast<fftw_complex*>(impl_->hbuf.data());
    std::lock_guard<std::mutex> lock(plan_mutex());
    // FFTW_ESTIMATE keeps plan selection deterministic across runs.
    impl_->fwd = fftw_plan_dft_3d(n, n, n, c, c, FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_3d(n, n, n, c, c, FFTW_BACKWARD, FFTW_ESTIMATE);
    impl_->r2c = fftw_plan_dft_r2c_3d(n, n, n, impl_->rbuf.data(), h, FFTW_ESTIMATE);
    impl_->c2r = fftw_plan_dft_c2r_3d(n, n, n, h, impl_->rbuf.data(), FFTW_ESTIMATE);
    if (!impl_->fwd || !impl_->bwd || !impl_->r2c || !impl_->c2r)
        throw std::runtime_error("FftEngine: plan creation failed for n=" + std::to_string(n));
}

FftEngine::~FftEngine() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(impl_->fwd);
    fftw_destroy_plan(impl_->bwd);
    fftw_destroy_plan(impl_->r2c);
    fftw_destroy_plan(impl_->c2r);
}

void FftEngine::forward(const cplx* in, cplx* out) const {
    auto* pin = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in));
    fftw_execute_dft(impl_->fwd, pin, reinterpret_cast<fftw_complex*>(out));
}

void FftEngine::inverse(const cplx* in, cplx* out) const {
    auto* pin = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in));
    fftw_execute_dft(impl_->bwd, pin, reinterpret_cast<fftw_complex*>(out));
    const double s = 1.0 / double(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] *= s;
}

void FftEngine::forward_real(const double* in, cplx* half_out) const {
    fftw_execute_dft_r2c(impl_->r2c, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(half_out));
}

void FftEngine::inverse_real(cplx* half_in, double* out) const {
    fftw_execute_dft_c2r(impl_->c2r, reinterpret_cast<fftw_complex*>(half_in), out);
    const double s = 1.0 / double(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] *= s;
}

FftEngine& engine_for(int n) {
    thread_local std::map<int, std::unique_ptr<FftEngine>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<FftEngine>(n);
    return *slot;
}

} // namespace nsol
