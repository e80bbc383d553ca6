#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "ctk/tensor3.hpp"

namespace ctk {

/// A linear map between tensor spaces together with its adjoint under the entrywise
/// inner product.
class LinearTensorOperator {
public:
    using Map = std::function<Tensor3(const Tensor3&)>;

    LinearTensorOperator(Dims domain, Dims range, Map apply, Map apply_adjoint);

    Tensor3 apply(const Tensor3& x) const;
    Tensor3 apply_adjoint(const Tensor3& y) const;

    const Dims& domain_dims() const { return domain_; }
    const Dims& range_dims() const { return range_; }
    bool is_square() const { return domain_ == range_; }

private:
    Dims domain_;
    Dims range_;
    Map apply_;
    Map adjoint_;
};

LinearTensorOperator identity_operator(Dims dims);

/// X -> a *c X for X with `width` lateral slices (a: n1 x n2 x p, X: n2 x width x p).
/// The adjoint is the exact one, see cosine_product_adjoint.
LinearTensorOperator left_product_operator(const Tensor3& a, std::size_t width);

/// X -> a *c X *c b (a: n1 x n2 x p, X: n2 x s1 x p, b: s1 x s2 x p).
LinearTensorOperator sandwich_operator(const Tensor3& a, const Tensor3& b);

/// max over random pairs (X, Y) of |<op X, Y> - <X, op^T Y>| / (||op X|| ||Y||).
double adjoint_check(const LinearTensorOperator& op, std::size_t trials, std::uint64_t seed = 1);

}  // namespace ctk
