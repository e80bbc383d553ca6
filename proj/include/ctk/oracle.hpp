#pragma once

// Brute-force reference for the cosine product. Materializes the block
// Toeplitz-plus-Hankel matricization and multiplies densely; intended for
// extents up to roughly 16 and used to validate every fast path.

#include <cstddef>

#include <Eigen/Core>

#include "ctk/tensor3.hpp"

namespace ctk::oracle {

inline constexpr std::size_t kDefaultMaxRows = 4096;

/// n1*n3 x n2*n3 matrix: block Toeplitz built from the slices (A_1 on the block
/// diagonal, A_{|p-q|+1} at block (p, q)) plus the block Hankel whose first block row
/// is (A_2, ..., A_n3, 0) and last block row is (0, A_n3, ..., A_2).
Eigen::MatrixXd mat(const Tensor3& a, std::size_t max_rows = kDefaultMaxRows);

/// Inverse of mat. Reads the first block column, which holds A_p + A_{p+1}
/// (with A_{n3+1} = 0), and back-substitutes.
Tensor3 ten(const Eigen::MatrixXd& m, std::size_t n1, std::size_t n2, std::size_t n3);

/// ten(mat(a) * mat(b)).
Tensor3 product(const Tensor3& a, const Tensor3& b, std::size_t max_rows = kDefaultMaxRows);

}  // namespace ctk::oracle
