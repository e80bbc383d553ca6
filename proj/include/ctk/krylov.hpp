#pragma once

#include <cstddef>
#include <optional>

#include <Eigen/Core>

#include "ctk/basis.hpp"
#include "ctk/linear_operator.hpp"

namespace ctk {

/// Norms below this fraction of the pre-orthogonalization norm count as exact breakdown.
inline constexpr double kBreakdownTolerance = 1e-14;

/// Result of the tensor Arnoldi process.
///
/// After m steps without breakdown: basis holds V_1..V_{m+1} and hessenberg is the
/// (m+1) x m upper Hessenberg matrix H~_m, so that op(V_j) = sum_i h_{ij} V_i.
/// When h_{j+1,j} vanishes at step j, breakdown_step = j, the basis stops at V_j and
/// hessenberg is (j+1) x j with a zero last row.
struct ArnoldiDecomposition {
    TensorBasis basis;
    Eigen::MatrixXd hessenberg;
    double beta = 0.0;
    std::optional<std::size_t> breakdown_step;

    std::size_t steps() const { return static_cast<std::size_t>(hessenberg.cols()); }
};

/// Modified Gram-Schmidt Arnoldi on a square operator, with one classical
/// re-orthogonalization pass whenever the orthogonalized norm falls below 1/sqrt(2) of
/// its initial value.
ArnoldiDecomposition arnoldi(const LinearTensorOperator& op, const Tensor3& seed, std::size_t m);

/// Result of the tensor Golub-Kahan bidiagonalization.
///
/// bidiag is the lower bidiagonal (m+1) x m matrix with alpha_1..alpha_m on the diagonal
/// and beta_2..beta_{m+1} below it, so op(V_j) = alpha_j U_j + beta_{j+1} U_{j+1} and
/// op^T(U_{j+1}) = beta_{j+1} V_j + alpha_{j+1} V_{j+1}.
/// u_basis holds U_1..U_{m+1}; v_basis holds V_1..V_m plus V_{m+1} when alpha_{m+1} > 0
/// (alpha_next stores it).
struct BidiagDecomposition {
    TensorBasis u_basis;
    TensorBasis v_basis;
    Eigen::MatrixXd bidiag;
    double beta1 = 0.0;
    double alpha_next = 0.0;
    std::optional<std::size_t> breakdown_step;

    std::size_t steps() const { return static_cast<std::size_t>(bidiag.cols()); }
};

BidiagDecomposition golub_kahan(const LinearTensorOperator& op, const Tensor3& c, std::size_t m);

}  // namespace ctk
