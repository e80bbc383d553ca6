#include "ctk/transform.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "ctk/error.hpp"
#include "ctk/kernels.hpp"

namespace ctk {

Eigen::MatrixXd dct_matrix(std::size_t n) {
    if (n == 0) throw DimensionError("dct_matrix: n must be positive");
    const auto nn = static_cast<Eigen::Index>(n);
    const double dn = static_cast<double>(n);
    Eigen::MatrixXd c(nn, nn);
    for (Eigen::Index i = 0; i < nn; ++i) {
        const double scale = std::sqrt((i == 0 ? 1.0 : 2.0) / dn);
        for (Eigen::Index j = 0; j < nn; ++j) {
            c(i, j) = scale * std::cos(static_cast<double>(i) * static_cast<double>(2 * j + 1) *
                                       std::numbers::pi / (2.0 * dn));
        }
    }
    return c;
}

TubeTransform make_transform(std::size_t n3) {
    const Eigen::MatrixXd c = dct_matrix(n3);
    const auto nn = static_cast<Eigen::Index>(n3);

    // I + Z
    Eigen::MatrixXd shift = Eigen::MatrixXd::Identity(nn, nn);
    for (Eigen::Index i = 0; i + 1 < nn; ++i) shift(i, i + 1) = 1.0;

    // W^{-1}: the first DCT column is strictly positive, cos((i-1)pi/2n) > 0.
    const Eigen::VectorXd w = c.col(0);
    Eigen::MatrixXd forward = w.cwiseInverse().asDiagonal() * (c * shift);

    TubeTransform t;
    t.size = n3;
    t.inverse = forward.partialPivLu().inverse();
    t.forward = std::move(forward);
    return t;
}

Tensor3 apply_tube_matrix(const Tensor3& a, const Eigen::MatrixXd& t) {
    const std::size_t n3 = a.tubes();
    if (static_cast<std::size_t>(t.rows()) != n3 || static_cast<std::size_t>(t.cols()) != n3) {
        throw DimensionError("tube transform of size " + std::to_string(t.rows()) +
                             " applied to tensor " + a.dims().to_string());
    }
    const auto& k = kernels::active();
    const std::size_t panel = a.dims().slice_size();
    Tensor3 out(a.dims());
    const double* src = a.data().data();
    double* dst = out.data().data();
    for (std::size_t p = 0; p < n3; ++p) {
        for (std::size_t q = 0; q < n3; ++q) {
            const double coef = t(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
            if (coef != 0.0) k.axpy(coef, src + q * panel, dst + p * panel, panel);
        }
    }
    return out;
}

Tensor3 transform_mode3(const Tensor3& a, const TubeTransform& t, TransformDirection direction) {
    if (a.tubes() != t.size) {
        throw DimensionError("transform_mode3: tensor " + a.dims().to_string() +
                             " vs transform size " + std::to_string(t.size));
    }
    return apply_tube_matrix(a, direction == TransformDirection::forward ? t.forward : t.inverse);
}

}  // namespace ctk
