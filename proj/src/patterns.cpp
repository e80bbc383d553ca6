#include "ctk/patterns.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ctk/error.hpp"
#include "ctk/imaging.hpp"

namespace ctk {

std::span<const std::string_view> pattern_names() {
    static constexpr std::array<std::string_view, 4> names{"checkerboard", "radial", "smooth", "disk"};
    return names;
}

namespace {

Tensor3 checkerboard(std::size_t n) {
    Tensor3 t(n, n, 3);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const double c = static_cast<double>((8 * i / n + 8 * j / n) % 2);
            t(i, j, 0) = 0.8 * c + 0.1;
            t(i, j, 1) = 0.8 * (0.5 * c + 0.25) + 0.1;
            t(i, j, 2) = 0.8 * (1.0 - c) + 0.1;
        }
    }
    return t;
}

Tensor3 radial(std::size_t n) {
    Tensor3 t(n, n, 3);
    const double dn = static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const double y = i / dn - 0.5, x = j / dn - 0.5;
            const double r = std::hypot(x, y);
            t(i, j, 0) = std::clamp(1.0 - 1.4 * r, 0.0, 1.0);
            t(i, j, 1) = 0.5 + 0.4 * std::cos(6.0 * r);
            t(i, j, 2) = std::clamp(1.4 * r, 0.0, 1.0);
        }
    }
    return t;
}

// Bright disk, shifted horizontally per channel, over a dimmed radial gradient.
Tensor3 disk(std::size_t n) {
    Tensor3 t = radial(n);
    const double dn = static_cast<double>(n);
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                const double y = i / dn - 0.5, x = j / dn - 0.5 - 0.1 * static_cast<double>(k);
                t(i, j, k) = 0.3 * t(i, j, k) + (std::hypot(x, y) < 0.25 ? 0.6 : 0.1);
            }
        }
    }
    return t;
}

// Gaussian-filtered white noise stretched to [0, 1].
Tensor3 smooth(std::size_t n, std::uint64_t seed) {
    const Tensor3 noise = Tensor3::random_normal(Dims{n, n, 3}, seed);
    const GaussianBlurSpec spec{n, 3.0, std::min<std::size_t>(9, n - 1)};
    const Eigen::MatrixXd g = gaussian_band_matrix(spec);
    Tensor3 t(n, n, 3);
    for (std::size_t k = 0; k < 3; ++k) t.slice(k) = g * noise.slice(k) * g.transpose();
    const auto [lo, hi] = std::minmax_element(t.data().begin(), t.data().end());
    const double a = *lo, span = *hi - *lo;
    for (double& v : t.data()) v = span > 0.0 ? (v - a) / span : 0.5;
    return t;
}

}  // namespace

Tensor3 make_pattern(std::string_view name, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DimensionError("make_pattern: size must be positive");
    if (name == "checkerboard") return checkerboard(n);
    if (name == "radial") return radial(n);
    if (name == "smooth") return smooth(n, seed);
    if (name == "disk") return disk(n);
    throw DimensionError("unknown pattern '" + std::string(name) + "'");
}

}  // namespace ctk
