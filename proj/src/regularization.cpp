#include "ctk/regularization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "ctk/error.hpp"

namespace ctk {

SmallSvd small_svd(const Eigen::MatrixXd& m) {
    if (m.size() == 0) throw DimensionError("small_svd: empty matrix");
    if (!m.allFinite()) throw NumericError("small_svd: non-finite input");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return SmallSvd{svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

GcvCurve GcvCurve::from_problem(const ProjectedProblem& p) {
    if (!(p.rhs_scale > 0.0)) throw NumericError("GcvCurve: rhs scale must be positive");
    const SmallSvd svd = small_svd(p.matrix);
    GcvCurve c;
    c.singular_values = svd.sigma;
    c.transformed_rhs = p.rhs_scale * svd.u.row(0).transpose();
    return c;
}

double gcv_value(const GcvCurve& curve, double lambda, GcvOptions options) {
    if (!(lambda >= 0.0)) throw NumericError("gcv_value: lambda must be nonnegative");
    const Eigen::Index m = curve.singular_values.size();
    if (m == 0 || curve.transformed_rhs.size() < m) {
        throw DimensionError("gcv_value: malformed curve");
    }
    const double l2 = lambda * lambda;
    double num = 0.0, den = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        const double s = curve.singular_values(i);
        const double shifted = s * s + l2;
        if (shifted == 0.0) {
            throw NumericError("gcv_value: zero singular value with lambda = 0");
        }
        const double t = curve.transformed_rhs(i) / shifted;
        num += t * t;
        den += 1.0 / shifted;
    }
    if (options.include_residual_term && curve.transformed_rhs.size() > m) {
        if (l2 == 0.0) throw NumericError("gcv_value: residual term undefined at lambda = 0");
        const double g = curve.transformed_rhs(m);
        num += g * g / (l2 * l2);
    }
    return num / (den * den);
}

double minimize_gcv(const GcvCurve& curve, GcvOptions options) {
    if (curve.singular_values.size() == 0 || !(curve.singular_values(0) > 0.0)) {
        throw NumericError("minimize_gcv: all singular values are zero");
    }
    constexpr int kGrid = 200;
    constexpr double kRelTol = 1e-4;
    const double hi = std::log(curve.singular_values(0));
    const double lo = hi + std::log(1e-12);
    auto f = [&](double log_lambda) { return gcv_value(curve, std::exp(log_lambda), options); };

    const double step = (hi - lo) / (kGrid - 1);
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        const double v = f(lo + step * i);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }

    // Golden-section search on the bracket around the best grid point.
    double a = lo + step * std::max(best - 1, 0);
    double b = lo + step * std::min(best + 1, kGrid - 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    const double tol = std::log1p(kRelTol);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    double x = 0.5 * (a + b);
    double fx = f(x);
    // Monotone curves end at an interval endpoint.
    for (double edge : {lo, hi}) {
        const double fe = f(edge);
        if (fe <= fx && std::abs(edge - x) <= 2.0 * step) {
            x = edge;
            fx = fe;
        }
    }
    if (x == hi) return curve.singular_values(0);
    if (x == lo) return 1e-12 * curve.singular_values(0);
    return std::exp(x);
}

Eigen::VectorXd tikhonov_solve(const ProjectedProblem& p, double lambda) {
    const Eigen::Index rows = p.matrix.rows(), m = p.matrix.cols();
    if (m == 0) throw DimensionError("tikhonov_solve: empty projected matrix");
    if (!(lambda >= 0.0)) throw NumericError("tikhonov_solve: lambda must be nonnegative");
    if (!p.matrix.allFinite() || !std::isfinite(p.rhs_scale)) {
        throw NumericError("tikhonov_solve: non-finite input");
    }
    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(rows + m, m);
    aug.topRows(rows) = p.matrix;
    aug.bottomRows(m).diagonal().setConstant(lambda);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows + m);
    rhs(0) = p.rhs_scale;

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(aug);
    if (qr.rank() < m) {
        throw NumericError("tikhonov_solve: singular projected system (rank " +
                           std::to_string(qr.rank()) + " < " + std::to_string(m) + ")");
    }
    return qr.solve(rhs);
}

LCurveCorner lcurve_corner(std::span<const LCurvePoint> points) {
    if (points.size() < 3) throw DimensionError("lcurve_corner: need at least 3 points");
    for (const auto& p : points) {
        if (!(p.residual_norm > 0.0) || !(p.solution_norm > 0.0)) {
            throw NumericError("lcurve_corner: norms must be positive");
        }
    }
    auto lx = [&](std::size_t i) { return std::log(points[i].residual_norm); };
    auto ly = [&](std::size_t i) { return std::log(points[i].solution_norm); };
    const std::size_t last = points.size() - 1;
    const double dx = lx(last) - lx(0);
    const double dy = ly(last) - ly(0);
    const double chord = std::hypot(dx, dy);

    LCurveCorner out{1, true};
    double best = 0.0;
    for (std::size_t i = 1; i < last; ++i) {
        double d = std::abs(dx * (ly(i) - ly(0)) - dy * (lx(i) - lx(0)));
        if (chord > 0.0) d /= chord;
        if (d > best) {
            best = d;
            out.index = i;
        }
    }
    const double scale = std::max({chord, std::abs(lx(0)), std::abs(ly(0)), 1.0});
    out.flat = best <= 1e-12 * scale;
    if (out.flat) out.index = 1;
    return out;
}

}  // namespace ctk
