#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "ctk/tensor3.hpp"

namespace ctk {

/// Orthogonal DCT-II matrix: entry (i, j) = sqrt((2 - delta_{i1}) / n) cos((i-1)(2j-1)pi / 2n)
/// with 1-based indices.
Eigen::MatrixXd dct_matrix(std::size_t n);

/// The mode-3 transform pair that block-diagonalizes the cosine product.
///
/// forward = W^{-1} C (I + Z), where C is dct_matrix(n3), W = diag(C(:, 1)) and Z is the
/// shift matrix with ones on the first superdiagonal. Slice-wise products of
/// forward-transformed tensors, mapped back with the inverse, reproduce the
/// block Toeplitz-plus-Hankel product.
struct TubeTransform {
    std::size_t size = 0;
    Eigen::MatrixXd forward;
    Eigen::MatrixXd inverse;
};

TubeTransform make_transform(std::size_t n3);

enum class TransformDirection { forward, inverse };

/// Replaces every tube A(i, j, :) by T * A(i, j, :) for an n3 x n3 matrix T.
Tensor3 apply_tube_matrix(const Tensor3& a, const Eigen::MatrixXd& t);

Tensor3 transform_mode3(const Tensor3& a, const TubeTransform& t, TransformDirection direction);

}  // namespace ctk
