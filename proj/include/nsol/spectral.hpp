#pragma once

#include "nsol/field.hpp"

#include <array>
#include <functional>

namespace nsol {

/// Free-space Coulomb potential (|x|^-1 * density) of a real density,
/// computed with the radially truncated kernel: Fourier symbol
/// 4*pi*(1-cos(R|k|))/|k|^2, zero mode 2*pi*R^2. Exact whenever density
/// and output are supported in a ball of diameter <= R.
/// Rejects complex-valued densities.
Field3 coulomb_convolve(const Field3& density);

/// Spectral partial derivatives (i k_j multipliers, Nyquist derivative zeroed).
std::array<Field3, 3> gradient(const Field3& f);
Field3 derivative(const Field3& f, int axis);

/// Spectral Laplacian (-|k|^2 multiplier).
Field3 laplacian(const Field3& f);

/// (a - b/2 * Laplacian) f in one transform pair; used for the H^1 metric.
Field3 helmholtz(const Field3& f, double a, double b);
/// Inverse of the above (symbol 1/(a + b/2 |k|^2)).
Field3 helmholtz_inverse(const Field3& f, double a, double b);

/// Band-limited interpolation of f(. - offset); exact for lattice offsets.
Field3 translate(const Field3& f, const Vec3& offset);

/// Samples the trigonometric interpolant of f at scale*x (periodic wrap).
/// Used for the lambda-rescaling of minimizers; O(n^4) per axis.
Field3 dilate(const Field3& f, double scale);

/// Zero-pad Fourier interpolation onto a finer grid (warm starts).
Field3 upsample(const Field3& f, const Grid3& fine);

/// ||grad f||_2^2 via Parseval with the h^3 quadrature normalization.
double grad_norm_sq(const Field3& f);

/// Integral of k_j |fhat|^2, normalized so it equals Im \int conj(f) d_j f.
Vec3 phase_current_integral(const Field3& f);

/// Generic Fourier multiplier application (diagnostics and tests).
Field3 apply_symbol(const Field3& f, const std::function<cplx(double, double, double)>& symbol);

} // namespace nsol
