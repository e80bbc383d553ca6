#pragma once

#include <cstddef>

#include "ctk/tensor3.hpp"
#include "ctk/transform.hpp"

namespace ctk {

/// Slice-by-slice matrix product: result(:, :, k) = a(:, :, k) * b(:, :, k).
Tensor3 facewise_product(const Tensor3& a, const Tensor3& b);

/// Cosine tensor-tensor product of an n1 x n2 x n3 and an n2 x m x n3 tensor.
///
/// Both operands are mapped to the transform domain, multiplied slice by slice and
/// mapped back. Equals ten(mat(a) * mat(b)) for the block Toeplitz-plus-Hankel
/// matricization (see oracle.hpp).
Tensor3 cosine_product(const Tensor3& a, const Tensor3& b);
Tensor3 cosine_product(const Tensor3& a, const Tensor3& b, const TubeTransform& t);

/// Adjoint of X -> a *c X with respect to the entrywise inner product, applied to y.
///
/// The transform is not orthogonal, so this is NOT transpose(a) *c y. It is
/// forward^T [ (a~_k)^T (forward^{-T} y)_k ] with a~ the forward-transformed a.
Tensor3 cosine_product_adjoint(const Tensor3& a, const Tensor3& y);
Tensor3 cosine_product_adjoint(const Tensor3& a, const Tensor3& y, const TubeTransform& t);

/// Slice-wise transpose; mat(transpose(a)) = mat(a)^T.
Tensor3 transpose(const Tensor3& a);

/// n x n x n3 tensor whose forward transform has identity frontal slices.
Tensor3 identity_tensor(std::size_t n, std::size_t n3);

/// Entrywise inner product, always evaluated in the spatial domain.
double inner(const Tensor3& a, const Tensor3& b);

double fro_norm(const Tensor3& a);

}  // namespace ctk
