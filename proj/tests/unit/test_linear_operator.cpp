#include <gtest/gtest.h>

#include "ctk/error.hpp"
#include "ctk/linear_operator.hpp"
#include "support.hpp"

using namespace ctk;
using ctk::test::Gen;

TEST(LinearOperator, ShapesAndDimensionChecks) {
    Gen g(1);
    const auto op = left_product_operator(g.tensor({5, 4, 3}), 2);
    EXPECT_EQ(op.domain_dims(), (Dims{4, 2, 3}));
    EXPECT_EQ(op.range_dims(), (Dims{5, 2, 3}));
    EXPECT_FALSE(op.is_square());
    EXPECT_THROW(op.apply(Tensor3(5, 2, 3)), DimensionError);
    EXPECT_THROW(op.apply_adjoint(Tensor3(4, 2, 3)), DimensionError);
    const auto sw = sandwich_operator(g.tensor({5, 4, 3}), g.tensor({2, 6, 3}));
    EXPECT_EQ(sw.domain_dims(), (Dims{4, 2, 3}));
    EXPECT_EQ(sw.range_dims(), (Dims{5, 6, 3}));
    EXPECT_THROW(sandwich_operator(g.tensor({2, 2, 3}), g.tensor({2, 2, 2})), DimensionError);
}

TEST(LinearOperator, LeftProductMatchesCosineProduct) {
    Gen g(2);
    const Tensor3 a = g.tensor({4, 3, 5});
    const Tensor3 x = g.tensor({3, 2, 5});
    EXPECT_LE(test::rel_diff(left_product_operator(a, 2).apply(x), cosine_product(a, x)), 1e-13);
}

TEST(LinearOperator, SandwichMatchesCosineProducts) {
    Gen g(3);
    const Tensor3 a = g.tensor({4, 3, 3});
    const Tensor3 b = g.tensor({2, 5, 3});
    const Tensor3 x = g.tensor({3, 2, 3});
    EXPECT_LE(test::rel_diff(sandwich_operator(a, b).apply(x), cosine_product(cosine_product(a, x), b)), 1e-13);
}

TEST(LinearOperator, DenseAdjointIsTranspose) {
    Gen g(4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t p = g.extent(1, 5);
        const auto op = sandwich_operator(g.tensor({g.extent(1, 4), 3, p}), g.tensor({2, g.extent(1, 4), p}));
        const Eigen::MatrixXd fwd = test::dense(op);
        const Eigen::MatrixXd adj = test::dense(op, true);
        ASSERT_LE((adj - fwd.transpose()).norm(), 1e-12 * fwd.norm());
    }
}

TEST(AdjointCheck, ExactAdjointsPass) {
    Gen g(5);
    EXPECT_LE(adjoint_check(identity_operator({3, 3, 2}), 5), 1e-15);
    EXPECT_LE(adjoint_check(left_product_operator(g.tensor({6, 4, 3}), 2), 10), 1e-10);
    EXPECT_LE(adjoint_check(sandwich_operator(g.tensor({5, 4, 3}), g.tensor({3, 6, 3})), 10), 1e-10);
}

TEST(AdjointCheck, WrongAdjointDetected) {
    Gen g(6);
    const Tensor3 a = g.tensor({4, 4, 3});
    const LinearTensorOperator wrong(
        {4, 2, 3}, {4, 2, 3}, [a](const Tensor3& x) { return cosine_product(a, x); },
        [a](const Tensor3& y) { return cosine_product(a, y); });
    EXPECT_GT(adjoint_check(wrong, 10), 1e-3);
}

TEST(AdjointCheck, TransposedFactorIsNotTheAdjointForLongTubes) {
    // With a non-orthogonal tube transform, X -> A^T * X differs from the adjoint of
    // X -> A * X unless n3 = 1.
    Gen g(7);
    const Tensor3 a = g.tensor({4, 4, 3});
    const LinearTensorOperator naive(
        {4, 2, 3}, {4, 2, 3}, [a](const Tensor3& x) { return cosine_product(a, x); },
        [a](const Tensor3& y) { return cosine_product(transpose(a), y); });
    EXPECT_GT(adjoint_check(naive, 10), 1e-3);

    const Tensor3 a1 = g.tensor({4, 4, 1});
    const LinearTensorOperator flat(
        {4, 2, 1}, {4, 2, 1}, [a1](const Tensor3& x) { return cosine_product(a1, x); },
        [a1](const Tensor3& y) { return cosine_product(transpose(a1), y); });
    EXPECT_LE(adjoint_check(flat, 10), 1e-12);
}

TEST(AdjointCheck, ZeroTrialsRejected) {
    EXPECT_THROW(adjoint_check(identity_operator({2, 2, 2}), 0), DimensionError);
}
