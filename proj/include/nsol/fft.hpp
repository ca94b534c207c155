#pragma once

#include "nsol/field.hpp"

#include <memory>

namespace nsol {

/// Owns FFTW plans for one cube size. Forward transforms are plain DFTs
/// (no normalization); inverse transforms carry the 1/n^3 factor.
/// Plan creation is serialized globally; execution uses the new-array
/// interface, so one engine must not be shared between threads while a
/// transform is running. Use engine_for() which hands out thread-local
/// instances.
class FftEngine {
public:
    explicit FftEngine(int n);
    ~FftEngine();
    FftEngine(const FftEngine&) = delete;
    FftEngine& operator=(const FftEngine&) = delete;

    int n() const { return n_; }
    std::size_t size() const { return std::size_t(n_) * n_ * n_; }
    std::size_t half_size() const { return std::size_t(n_) * n_ * (n_ / 2 + 1); }

    /// out = sum_j in_j e^{-2 pi i m.j/n}; in == out allowed.
    void forward(const cplx* in, cplx* out) const;
    /// out = (1/n^3) sum_m in_m e^{+2 pi i m.j/n}; in == out allowed.
    void inverse(const cplx* in, cplx* out) const;

    /// Real-data transforms with the half-complex layout n*n*(n/2+1).
    void forward_real(const double* in, cplx* half_out) const;
    /// Destroys half_in (FFTW c2r); includes the 1/n^3 factor.
    void inverse_real(cplx* half_in, double* out) const;

private:
    int n_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Thread-local engine registry keyed by n.
FftEngine& engine_for(int n);
inline FftEngine& engine_for(const Grid3& g) { return engine_for(g.n); }

} // namespace nsol
