#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "ctk/error.hpp"
#include "ctk/regularization.hpp"
#include "support.hpp"

using namespace ctk;
using ctk::test::Gen;

namespace {

GcvCurve curve(std::vector<double> sigma, std::vector<double> g) {
    GcvCurve c;
    c.singular_values = Eigen::Map<Eigen::VectorXd>(sigma.data(), static_cast<Eigen::Index>(sigma.size()));
    c.transformed_rhs = Eigen::Map<Eigen::VectorXd>(g.data(), static_cast<Eigen::Index>(g.size()));
    return c;
}

double gcv_direct(const GcvCurve& c, double lambda) {
    double num = 0.0, den = 0.0;
    for (Eigen::Index i = 0; i < c.singular_values.size(); ++i) {
        const double d = c.singular_values(i) * c.singular_values(i) + lambda * lambda;
        num += (c.transformed_rhs(i) / d) * (c.transformed_rhs(i) / d);
        den += 1.0 / d;
    }
    return num / (den * den);
}

GcvCurve random_curve(Gen& g, Eigen::Index m) {
    std::vector<double> s(static_cast<std::size_t>(m));
    for (auto& x : s) x = g.log_uniform(1e-6, 1e2);
    std::sort(s.begin(), s.end(), std::greater<>());
    std::vector<double> rhs(static_cast<std::size_t>(m + 1));
    for (auto& x : rhs) x = g.uniform(-1.0, 1.0);
    return curve(s, rhs);
}

ProjectedProblem random_problem(Gen& g, Eigen::Index m) {
    return {g.matrix(m + 1, m), g.uniform(0.5, 3.0)};
}

}  // namespace

TEST(SmallSvd, PaddedDiagonal) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 3.0;
    const SmallSvd s = small_svd(m);
    EXPECT_NEAR(s.sigma(0), 3.0, 1e-15);
    EXPECT_NEAR(s.sigma(1), 1.0, 1e-15);
}

TEST(SmallSvd, ReconstructionAndOrthogonality) {
    Gen g(1);
    const Eigen::MatrixXd m = g.matrix(6, 5);
    const SmallSvd s = small_svd(m);
    ASSERT_EQ(s.u.rows(), 6);
    ASSERT_EQ(s.u.cols(), 6);
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(6, 5);
    sigma.diagonal() = s.sigma;
    EXPECT_LE((s.u * sigma * s.v.transpose() - m).norm(), 1e-12 * m.norm());
    EXPECT_LE((s.u.transpose() * s.u - Eigen::MatrixXd::Identity(6, 6)).norm(), 1e-12);
    EXPECT_LE((s.v.transpose() * s.v - Eigen::MatrixXd::Identity(5, 5)).norm(), 1e-12);
    const SmallSvd st = small_svd(m.transpose());
    EXPECT_LE((st.sigma - s.sigma).norm(), 1e-12 * s.sigma(0));
}

TEST(SmallSvd, NonFiniteRejected) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Ones(3, 2);
    m(1, 1) = std::nan("");
    EXPECT_THROW(small_svd(m), NumericError);
}

TEST(GcvValue, HandExamples) {
    EXPECT_DOUBLE_EQ(gcv_value(curve({1.0}, {1.0, 0.0}), 0.0), 1.0);
    EXPECT_DOUBLE_EQ(gcv_value(curve({1.0}, {2.0, 0.0}), 1.0), 4.0);
    EXPECT_NEAR(gcv_value(curve({2.0, 1.0}, {1.0, 1.0, 0.0}), 0.0), 0.68, 1e-15);
}

TEST(GcvValue, ResidualTermIgnoredByDefault) {
    const GcvCurve c = curve({2.0, 1.0}, {1.0, 1.0, 5.0});
    EXPECT_NEAR(gcv_value(c, 0.0), 0.68, 1e-15);
    EXPECT_GT(gcv_value(c, 0.5, GcvOptions{true}), gcv_value(c, 0.5));
}

TEST(GcvValue, Errors) {
    EXPECT_THROW(gcv_value(curve({1.0, 0.0}, {1.0, 1.0, 0.0}), 0.0), NumericError);
    EXPECT_THROW(gcv_value(curve({1.0}, {1.0, 0.0}), -1.0), NumericError);
}

TEST(GcvValue, MatchesDirectSummation) {
    Gen g(2);
    for (int trial = 0; trial < 200; ++trial) {
        const GcvCurve c = random_curve(g, static_cast<Eigen::Index>(g.extent(1, 25)));
        const double lambda = g.log_uniform(1e-8, 1e2);
        const double direct = gcv_direct(c, lambda);
        ASSERT_NEAR(gcv_value(c, lambda), direct, 1e-14 * direct);
    }
}

TEST(MinimizeGcv, InteriorMinimumMatchesDenseScan) {
    Gen g(3);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 10; ++trial) {
        const GcvCurve c = random_curve(g, static_cast<Eigen::Index>(g.extent(3, 20)));
        const double lo = std::log(1e-12 * c.singular_values(0)), hi = std::log(c.singular_values(0));
        constexpr int kScan = 100000;
        double best = 0.0, best_val = std::numeric_limits<double>::infinity();
        for (int i = 0; i < kScan; ++i) {
            const double l = std::exp(lo + (hi - lo) * i / (kScan - 1));
            const double v = gcv_direct(c, l);
            if (v < best_val) {
                best_val = v;
                best = l;
            }
        }
        if (best == std::exp(lo) || best == std::exp(hi)) continue;
        ++checked;
        const double lam = minimize_gcv(c);
        EXPECT_LE(std::abs(lam - best) / best, 1e-3) << "trial " << trial;
        // Never better than the scan by more than its resolution.
        EXPECT_GE(gcv_value(c, lam), best_val * (1.0 - 1e-6));
    }
    EXPECT_GE(checked, 5);
}

TEST(MinimizeGcv, MonotoneDecreasingGoesToRightEndpoint) {
    // G(l) = 1 / (1 + (1e-6 + l^2) / (1 + l^2))^2
    const GcvCurve d = curve({1.0, 1e-3}, {0.0, 1.0, 0.0});
    double prev = gcv_value(d, 1e-12);
    for (double l = 1e-11; l <= 1.0; l *= 10.0) {
        const double v = gcv_value(d, l);
        ASSERT_LE(v, prev * (1.0 + 1e-12));
        prev = v;
    }
    EXPECT_DOUBLE_EQ(minimize_gcv(d), 1.0);
}

TEST(MinimizeGcv, MonotoneIncreasingGoesToLeftEndpoint) {
    // G(l) = 1 / (1 + (1 + l^2) / (1e-6 + l^2))^2
    const GcvCurve c = curve({1.0, 1e-3}, {1.0, 0.0, 0.0});
    double prev = gcv_value(c, 1e-12);
    for (double l = 1e-11; l <= 1.0; l *= 10.0) {
        const double v = gcv_value(c, l);
        ASSERT_GE(v, prev * (1.0 - 1e-12));
        prev = v;
    }
    EXPECT_DOUBLE_EQ(minimize_gcv(c), 1e-12);
}

TEST(MinimizeGcv, ZeroSpectrumRejected) {
    EXPECT_THROW(minimize_gcv(curve({0.0, 0.0}, {1.0, 1.0, 1.0})), NumericError);
}

TEST(GcvCurve, FromProblem) {
    Gen g(4);
    const ProjectedProblem p = random_problem(g, 4);
    const GcvCurve c = GcvCurve::from_problem(p);
    const SmallSvd s = small_svd(p.matrix);
    EXPECT_LE((c.singular_values - s.sigma).norm(), 1e-14);
    ASSERT_EQ(c.transformed_rhs.size(), 5);
    EXPECT_NEAR(c.transformed_rhs.norm(), p.rhs_scale, 1e-13);
}

TEST(TikhonovSolve, PaddedIdentity) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 2);
    m(0, 0) = m(1, 1) = 1.0;
    const Eigen::VectorXd y = tikhonov_solve({m, 1.0}, 0.0);
    EXPECT_NEAR(y(0), 1.0, 1e-15);
    EXPECT_NEAR(y(1), 0.0, 1e-15);
}

TEST(TikhonovSolve, ScalarHandExample) {
    Eigen::MatrixXd m(2, 1);
    m << 2.0, 0.0;
    EXPECT_NEAR(tikhonov_solve({m, 1.0}, 0.0)(0), 0.5, 1e-15);
}

TEST(TikhonovSolve, SingularAtZeroLambda) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 2);
    m(0, 0) = 1.0;
    EXPECT_THROW(tikhonov_solve({m, 1.0}, 0.0), NumericError);
    EXPECT_NO_THROW(tikhonov_solve({m, 1.0}, 0.1));
}

TEST(TikhonovSolve, ShiftedNormalEquations) {
    Gen g(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index m = static_cast<Eigen::Index>(g.extent(1, 15));
        const ProjectedProblem p = random_problem(g, m);
        const double lambda = g.log_uniform(1e-4, 1e2);
        const Eigen::VectorXd y = tikhonov_solve(p, lambda);
        const Eigen::MatrixXd a = p.matrix.transpose() * p.matrix +
                                  lambda * lambda * Eigen::MatrixXd::Identity(m, m);
        const Eigen::VectorXd rhs = p.matrix.transpose() * (p.rhs_scale * Eigen::VectorXd::Unit(m + 1, 0));
        ASSERT_LE((a * y - rhs).norm(), 1e-10 * (a.norm() * y.norm() + rhs.norm()));
    }
}

TEST(TikhonovSolve, SolutionNormNonincreasingInLambda) {
    Gen g(6);
    for (int trial = 0; trial < 30; ++trial) {
        const ProjectedProblem p = random_problem(g, static_cast<Eigen::Index>(g.extent(1, 12)));
        double prev = std::numeric_limits<double>::infinity();
        for (double l = 1e-4; l < 1e6; l *= 3.0) {
            const double norm = tikhonov_solve(p, l).norm();
            ASSERT_LE(norm, prev * (1.0 + 1e-12));
            prev = norm;
        }
        EXPECT_LT(prev, 1e-4);
    }
}

TEST(LCurveCorner, SharpL) {
    const std::vector<LCurvePoint> pts{{10, 1}, {1, 1}, {1, 10}};
    const auto c = lcurve_corner(pts);
    EXPECT_EQ(c.index, 1u);
    EXPECT_FALSE(c.flat);
}

TEST(LCurveCorner, CollinearIsFlat) {
    std::vector<LCurvePoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({std::pow(10.0, -i), std::pow(10.0, 2 * i)});
    const auto c = lcurve_corner(pts);
    EXPECT_EQ(c.index, 1u);
    EXPECT_TRUE(c.flat);
}

TEST(LCurveCorner, PicksTheKnee) {
    // Residual drops fast then stalls; solution norm flat then grows.
    std::vector<LCurvePoint> pts;
    for (int k = 0; k < 5; ++k) pts.push_back({std::pow(10.0, -k), 1.0 + 0.01 * k});
    for (int k = 1; k < 8; ++k) pts.push_back({1e-4 * (1.0 - 0.01 * k), std::pow(10.0, k)});
    EXPECT_EQ(lcurve_corner(pts).index, 4u);
}

TEST(LCurveCorner, Errors) {
    const std::vector<LCurvePoint> two{{1, 1}, {2, 2}};
    EXPECT_THROW(lcurve_corner(two), DimensionError);
    const std::vector<LCurvePoint> zero{{1, 1}, {0, 2}, {2, 2}};
    EXPECT_THROW(lcurve_corner(zero), NumericError);
}
