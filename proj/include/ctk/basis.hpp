#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ctk/tensor3.hpp"

namespace ctk {

/// Ordered list of equally shaped tensors, e.g. the Krylov basis V_1, ..., V_m.
class TensorBasis {
public:
    TensorBasis() = default;
    explicit TensorBasis(std::vector<Tensor3> blocks);

    /// Appends a block; throws DimensionError if its dims differ from the existing blocks.
    void push_back(Tensor3 block);

    std::size_t size() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }
    const Tensor3& operator[](std::size_t i) const { return blocks_[i]; }
    const Dims& block_dims() const;

    std::span<const Tensor3> blocks() const { return blocks_; }
    /// The first count blocks.
    std::span<const Tensor3> leading(std::size_t count) const;

    auto begin() const { return blocks_.begin(); }
    auto end() const { return blocks_.end(); }

private:
    std::vector<Tensor3> blocks_;
};

/// p x l matrix of pairwise inner products <a_i, b_j>.
Eigen::MatrixXd diamond(std::span<const Tensor3> a, std::span<const Tensor3> b);
inline Eigen::MatrixXd diamond(const TensorBasis& a, const TensorBasis& b) {
    return diamond(a.blocks(), b.blocks());
}

/// sum_j y_j v_j. The coefficient count must equal the block count.
Tensor3 basis_combine(std::span<const Tensor3> v, const Eigen::VectorXd& y);
inline Tensor3 basis_combine(const TensorBasis& v, const Eigen::VectorXd& y) {
    return basis_combine(v.blocks(), y);
}

/// Column-wise combination: block j of the result is basis_combine(v, h.col(j)).
TensorBasis basis_combine(std::span<const Tensor3> v, const Eigen::MatrixXd& h);
inline TensorBasis basis_combine(const TensorBasis& v, const Eigen::MatrixXd& h) {
    return basis_combine(v.blocks(), h);
}

}  // namespace ctk
