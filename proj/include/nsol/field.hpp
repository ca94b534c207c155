#pragma once

#include "nsol/grid.hpp"

#include <complex>
#include <cstdlib>
#include <functional>
#include <limits>
#include <new>
#include <vector>

namespace nsol {

using cplx = std::complex<double>;

/// Allocator with 64-byte alignment so FFTW SIMD paths stay enabled.
template <class T>
struct AlignedAllocator {
    using value_type = T;
    AlignedAllocator() = default;
    template <class U> AlignedAllocator(const AlignedAllocator<U>&) {}
    T* allocate(std::size_t n) {
        void* p = std::aligned_alloc(64, ((n * sizeof(T) + 63) / 64) * 64);
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) { std::free(p); }
    template <class U> bool operator==(const AlignedAllocator<U>&) const { return true; }
};

using cvec = std::vector<cplx, AlignedAllocator<cplx>>;
using rvec = std::vector<double, AlignedAllocator<double>>;

/// Complex scalar field sampled on a periodic grid, row-major (x slowest).
/// The one quadrature rule used everywhere is h^3 * sum over samples.
class Field3 {
public:
    Field3() = default;
    explicit Field3(const Grid3& g) : grid_(g), v_(g.size(), cplx(0.0, 0.0)) {}

    static Field3 from_function(const Grid3& g, const std::function<cplx(double, double, double)>& f) {
        Field3 out(g);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                for (int k = 0; k < g.n; ++k)
                    out.v_[g.idx(i, j, k)] = f(g.coord(i), g.coord(j), g.coord(k));
        return out;
    }

    const Grid3& grid() const { return grid_; }
    std::size_t size() const { return v_.size(); }
    cplx* data() { return v_.data(); }
    const cplx* data() const { return v_.data(); }
    cplx& operator[](std::size_t i) { return v_[i]; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }
    cplx& at(int i, int j, int k) { return v_[grid_.idx(i, j, k)]; }
    const cplx& at(int i, int j, int k) const { return v_[grid_.idx(i, j, k)]; }

    /// h^3 * sum f
    cplx integral() const {
        cplx s(0.0, 0.0);
        for (const auto& z : v_) s += z;
        double h = grid_.spacing();
        return s * (h * h * h);
    }

    /// h^3 * sum |f|^2
    double l2_norm_sq() const {
        double s = 0.0;
        for (const auto& z : v_) s += std::norm(z);
        double h = grid_.spacing();
        return s * (h * h * h);
    }
    double l2_norm() const { return std::sqrt(l2_norm_sq()); }

    /// L^2 inner product h^3 * sum conj(a) * b.
    cplx inner(const Field3& b) const {
        require_same_grid(b);
        cplx s(0.0, 0.0);
        for (std::size_t i = 0; i < v_.size(); ++i) s += std::conj(v_[i]) * b.v_[i];
        double h = grid_.spacing();
        return s * (h * h * h);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : v_) m = std::max(m, std::abs(z));
        return m;
    }

    double max_abs_imag() const {
        double m = 0.0;
        for (const auto& z : v_) m = std::max(m, std::abs(z.imag()));
        return m;
    }

    bool finite() const {
        for (const auto& z : v_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    bool is_real(double tol_rel = 1e-12) const { return max_abs_imag() <= tol_rel * std::max(max_abs(), 1e-300); }

    Field3& operator+=(const Field3& b) {
        require_same_grid(b);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += b.v_[i];
        return *this;
    }
    Field3& operator-=(const Field3& b) {
        require_same_grid(b);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= b.v_[i];
        return *this;
    }
    Field3& operator*=(cplx s) {
        for (auto& z : v_) z *= s;
        return *this;
    }
    Field3& operator*=(double s) {
        for (auto& z : v_) z *= s;
        return *this;
    }

    friend Field3 operator+(Field3 a, const Field3& b) { a += b; return a; }
    friend Field3 operator-(Field3 a, const Field3& b) { a -= b; return a; }
    friend Field3 operator*(double s, Field3 a) { a *= s; return a; }
    friend Field3 operator*(cplx s, Field3 a) { a *= s; return a; }

    /// a += s*b
    void axpy(cplx s, const Field3& b) {
        require_same_grid(b);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += s * b.v_[i];
    }

    /// Pointwise multiply by a real field.
    void scale_by(const Field3& w) {
        require_same_grid(w);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] *= w.v_[i].real();
    }

    Field3 real_part() const {
        Field3 out(grid_);
        for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = v_[i].real();
        return out;
    }
    Field3 imag_part() const {
        Field3 out(grid_);
        for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = v_[i].imag();
        return out;
    }
    Field3 conj() const {
        Field3 out(grid_);
        for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = std::conj(v_[i]);
        return out;
    }

    void require_same_grid(const Field3& b) const {
        if (!(grid_ == b.grid_)) throw std::invalid_argument("Field3: grid mismatch");
    }

    /// Largest |f| over the six boundary faces divided by max |f|.
    double boundary_tail() const {
        const int n = grid_.n;
        double m = 0.0;
        auto look = [&](int i, int j, int k) { m = std::max(m, std::abs(v_[grid_.idx(i, j, k)])); };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                look(0, a, b);
                look(a, 0, b);
                look(a, b, 0);
            }
        double peak = max_abs();
        return peak > 0.0 ? m / peak : 0.0;
    }

private:
    Grid3 grid_;
    cvec v_;
};

} // namespace nsol
