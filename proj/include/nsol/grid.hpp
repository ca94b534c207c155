#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsol {

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Uniform periodic cubic grid on [-L/2, L/2)^3 with a truncation radius
/// for the free-space Coulomb kernel.
struct Grid3 {
    int n = 0;                     ///< points per axis
    double box_length = 0.0;       ///< physical side L
    double truncation_radius = 0.0;///< Coulomb kernel cutoff R, R <= L/2

    double spacing() const { return box_length / n; }
    std::size_t size() const { return std::size_t(n) * n * n; }

    /// Physical coordinate of index i along one axis (centered grid).
    double coord(int i) const { return -0.5 * box_length + i * spacing(); }

    /// Signed Fourier index for FFT bin m: {-n/2, ..., n/2-1}.
    int signed_index(int m) const { return m < n / 2 ? m : m - n; }

    /// Wavenumber of FFT bin m: (2*pi/L) * signed index.
    double wavenumber(int m) const { return 2.0 * M_PI / box_length * signed_index(m); }

    std::size_t idx(int i, int j, int k) const { return (std::size_t(i) * n + j) * n + k; }

    bool operator==(const Grid3&) const = default;
};

/// Validates parameters. n must be even and >= 8; R must fit the box.
inline Grid3 make_grid(int n, double box_length, double truncation_radius) {
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("make_grid: n must be even and >= 8, got " + std::to_string(n));
    if (box_length <= 0.0)
        throw std::invalid_argument("make_grid: box_length must be positive");
    if (truncation_radius <= 0.0 || truncation_radius > 0.5 * box_length + 1e-12)
        throw std::invalid_argument("make_grid: truncation_radius must lie in (0, L/2]");
    return Grid3{n, box_length, truncation_radius};
}

} // namespace nsol
