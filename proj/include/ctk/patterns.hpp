#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ctk/tensor3.hpp"

namespace ctk {

/// Names accepted by make_pattern: "checkerboard", "radial", "smooth", "disk".
std::span<const std::string_view> pattern_names();

/// Deterministic n x n x 3 test image with entries in [0, 1]. Only "smooth" uses the seed.
/// Throws DimensionError for unknown names or n == 0.
Tensor3 make_pattern(std::string_view name, std::size_t n, std::uint64_t seed = 5);

}  // namespace ctk
