#pragma once

// Small dense problems produced by the Krylov processes: the projected Tikhonov
// solve, GCV parameter selection and L-curve corner detection.

#include <cstddef>
#include <span>

#include <Eigen/Core>

namespace ctk {

/// min ||matrix * y - rhs_scale * e_1|| with matrix the (m+1) x m Hessenberg or
/// bidiagonal projection.
struct ProjectedProblem {
    Eigen::MatrixXd matrix;
    double rhs_scale = 0.0;
};

struct SmallSvd {
    Eigen::MatrixXd u;      // rows x rows
    Eigen::VectorXd sigma;  // min(rows, cols), nonincreasing
    Eigen::MatrixXd v;      // cols x cols
};

/// Full SVD of a small dense matrix. Throws NumericError on non-finite input.
SmallSvd small_svd(const Eigen::MatrixXd& m);

struct GcvCurve {
    Eigen::VectorXd singular_values;  // sigma_1 >= ... >= sigma_m >= 0
    Eigen::VectorXd transformed_rhs;  // g = beta * U^T e_1, length m+1

    static GcvCurve from_problem(const ProjectedProblem& p);
};

struct GcvOptions {
    /// Adds g_{m+1}^2 / lambda^4 to the numerator. The default sums i = 1..m only.
    bool include_residual_term = false;
};

/// [sum_{i<=m} (g_i / (s_i^2 + l^2))^2] / [sum_{i<=m} 1 / (s_i^2 + l^2)]^2.
double gcv_value(const GcvCurve& curve, double lambda, GcvOptions options = {});

/// lambda in [1e-12 sigma_1, sigma_1] minimizing gcv_value: 200-point logarithmic scan,
/// then golden-section refinement in log(lambda) to relative tolerance 1e-4.
double minimize_gcv(const GcvCurve& curve, GcvOptions options = {});

/// Solves min ||[M; lambda I] y - [beta e_1; 0]|| by Householder QR of the augmented
/// matrix. lambda = 0 requires full column rank.
Eigen::VectorXd tikhonov_solve(const ProjectedProblem& p, double lambda);

struct LCurvePoint {
    double residual_norm = 0.0;
    double solution_norm = 0.0;
};

struct LCurveCorner {
    std::size_t index = 0;
    /// Set when no point lies off the chord (collinear in log-log).
    bool flat = false;
};

/// Triangle method: the point with maximum perpendicular distance to the chord joining the
/// first and last points in log-log coordinates. Needs at least three points with positive
/// norms.
LCurveCorner lcurve_corner(std::span<const LCurvePoint> points);

}  // namespace ctk
