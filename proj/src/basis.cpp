#include "ctk/basis.hpp"

#include <string>

#include "ctk/cproduct.hpp"
#include "ctk/error.hpp"

namespace ctk {

TensorBasis::TensorBasis(std::vector<Tensor3> blocks) {
    blocks_.reserve(blocks.size());
    for (auto& b : blocks) push_back(std::move(b));
}

void TensorBasis::push_back(Tensor3 block) {
    if (!blocks_.empty() && block.dims() != blocks_.front().dims()) {
        throw DimensionError("TensorBasis: block " + block.dims().to_string() +
                             " does not match " + blocks_.front().dims().to_string());
    }
    blocks_.push_back(std::move(block));
}

const Dims& TensorBasis::block_dims() const {
    if (blocks_.empty()) throw DimensionError("TensorBasis: empty basis has no block dims");
    return blocks_.front().dims();
}

std::span<const Tensor3> TensorBasis::leading(std::size_t count) const {
    if (count > blocks_.size()) {
        throw DimensionError("TensorBasis: requested " + std::to_string(count) + " of " +
                             std::to_string(blocks_.size()) + " blocks");
    }
    return std::span<const Tensor3>(blocks_).first(count);
}

Eigen::MatrixXd diamond(std::span<const Tensor3> a, std::span<const Tensor3> b) {
    Eigen::MatrixXd g(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = inner(a[i], b[j]);
        }
    }
    return g;
}

Tensor3 basis_combine(std::span<const Tensor3> v, const Eigen::VectorXd& y) {
    if (v.empty()) throw DimensionError("basis_combine: empty basis");
    if (static_cast<std::size_t>(y.size()) != v.size()) {
        throw DimensionError("basis_combine: " + std::to_string(y.size()) + " coefficients for " +
                             std::to_string(v.size()) + " blocks");
    }
    Tensor3 out(v.front().dims());
    for (std::size_t j = 0; j < v.size(); ++j) out.add_scaled(y(static_cast<Eigen::Index>(j)), v[j]);
    return out;
}

TensorBasis basis_combine(std::span<const Tensor3> v, const Eigen::MatrixXd& h) {
    TensorBasis out;
    for (Eigen::Index j = 0; j < h.cols(); ++j) out.push_back(basis_combine(v, Eigen::VectorXd(h.col(j))));
    return out;
}

}  // namespace ctk
