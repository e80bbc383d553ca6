#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "ctk/cproduct.hpp"
#include "ctk/error.hpp"
#include "ctk/oracle.hpp"
#include "ctk/transform.hpp"
#include "support.hpp"

using namespace ctk;
using ctk::test::Gen;
using ctk::test::rel_diff;

TEST(Tensor3, StorageIsSliceMajorColumnWithinSlice) {
    Tensor3 t(2, 3, 2);
    t(1, 2, 1) = 7.0;
    EXPECT_EQ(t.data()[1 * 6 + 2 * 2 + 1], 7.0);
    EXPECT_EQ(t.slice(1)(1, 2), 7.0);
}

TEST(Tensor3, RejectsBadShapesAndNonFiniteData) {
    EXPECT_THROW(Tensor3(0, 2, 2), DimensionError);
    EXPECT_THROW(Tensor3(Dims{2, 2, 1}, std::vector<double>(3)), DimensionError);
    std::vector<double> bad(4, 0.0);
    bad[2] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(Tensor3(Dims{2, 2, 1}, bad), NumericError);
    bad[2] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(Tensor3(Dims{2, 2, 1}, bad), NumericError);
}

TEST(Tensor3, ArithmeticRequiresMatchingDims) {
    Tensor3 a(2, 2, 2), b(2, 3, 2);
    EXPECT_THROW(a += b, DimensionError);
    EXPECT_THROW((void)inner(a, b), DimensionError);
}

TEST(DctMatrix, SizeOne) {
    const Eigen::MatrixXd c = dct_matrix(1);
    ASSERT_EQ(c.rows(), 1);
    EXPECT_DOUBLE_EQ(c(0, 0), 1.0);
}

TEST(DctMatrix, SizeTwoByHand) {
    const Eigen::MatrixXd c = dct_matrix(2);
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2d expect;
    expect << h, h, h, -h;
    EXPECT_LE((c - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DctMatrix, OrthogonalAtEight) {
    const Eigen::MatrixXd c = dct_matrix(8);
    EXPECT_LE((c.transpose() * c - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DctMatrix, EntryFormula) {
    const std::size_t n = 5;
    const Eigen::MatrixXd c = dct_matrix(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const double expect = std::sqrt((i == 1 ? 1.0 : 2.0) / n) *
                                  std::cos(double(i - 1) * double(2 * j - 1) * std::numbers::pi / (2.0 * n));
            EXPECT_NEAR(c(i - 1, j - 1), expect, 1e-15);
        }
    }
}

TEST(DctMatrix, ZeroSizeRejected) { EXPECT_THROW(dct_matrix(0), DimensionError); }

TEST(MakeTransform, SizeOneIsIdentity) {
    const TubeTransform t = make_transform(1);
    EXPECT_DOUBLE_EQ(t.forward(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(t.inverse(0, 0), 1.0);
}

TEST(MakeTransform, InverseContract) {
    for (std::size_t n : {2u, 3u, 4u, 7u}) {
        const TubeTransform t = make_transform(n);
        const auto e = (t.forward * t.inverse - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
        EXPECT_LE(e, 1e-12) << "n3=" << n;
    }
}

TEST(MakeTransform, ForwardEntriesMatchDefinition) {
    const std::size_t n = 4;
    const Eigen::MatrixXd c = dct_matrix(n);
    const TubeTransform t = make_transform(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // (W^{-1} C (I+Z))_{ij} = (C_{ij} + C_{i,j-1}) / C_{i1}
            const double expect = (c(i, j) + (j > 0 ? c(i, j - 1) : 0.0)) / c(i, 0);
            EXPECT_NEAR(t.forward(i, j), expect, 1e-13);
        }
    }
}

TEST(MakeTransform, DiagonalizesToeplitzPlusHankel) {
    Gen g(11);
    const std::size_t n = 4;
    const Eigen::VectorXd v = g.vector(n);
    const Eigen::VectorXd w = g.vector(n);
    Tensor3 tv(1, 1, n), tw(1, 1, n);
    for (std::size_t k = 0; k < n; ++k) {
        tv(0, 0, k) = v(k);
        tw(0, 0, k) = w(k);
    }
    const Tensor3 prod = cosine_product(tv, tw);
    Eigen::VectorXd pv(n);
    for (std::size_t k = 0; k < n; ++k) pv(k) = prod(0, 0, k);
    const Eigen::MatrixXd thv = ctk::test::th(v);
    EXPECT_LE((ctk::test::th(pv) - thv * ctk::test::th(w)).norm(), 1e-12 * thv.norm());

    const TubeTransform t = make_transform(n);
    const Eigen::MatrixXd cm = dct_matrix(n);
    const Eigen::MatrixXd d = cm * thv * cm.transpose();
    const Eigen::VectorXd fv = t.forward * v;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(d(i, j), i == j ? fv(i) : 0.0, 1e-12);
    }
}

TEST(TransformMode3, RoundTrip) {
    Gen g(3);
    const Tensor3 a = g.tensor({3, 2, 4});
    const TubeTransform t = make_transform(4);
    const Tensor3 back = transform_mode3(transform_mode3(a, t, TransformDirection::forward), t,
                                         TransformDirection::inverse);
    EXPECT_LE(fro_norm(back - a), 1e-12 * fro_norm(a));
}

TEST(TransformMode3, LengthOneIsIdentity) {
    Gen g(4);
    const Tensor3 a = g.tensor({3, 5, 1});
    EXPECT_EQ(transform_mode3(a, make_transform(1), TransformDirection::forward), a);
}

TEST(TransformMode3, IdentityTensorHasIdentitySlices) {
    const Tensor3 id = identity_tensor(3, 5);
    const Tensor3 f = transform_mode3(id, make_transform(5), TransformDirection::forward);
    for (std::size_t k = 0; k < 5; ++k) {
        EXPECT_LE((f.slice(k) - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(TransformMode3, MismatchRejected) {
    EXPECT_THROW(transform_mode3(Tensor3(2, 2, 3), make_transform(4), TransformDirection::forward),
                 DimensionError);
}

TEST(CosineProduct, RightIdentity) {
    Gen g(5);
    const Tensor3 a = g.tensor({4, 3, 3});
    EXPECT_LE(rel_diff(cosine_product(a, identity_tensor(3, 3)), a), 1e-12);
}

TEST(CosineProduct, SingleSliceIsMatrixProduct) {
    Gen g(6);
    const Tensor3 a = g.tensor({3, 4, 1});
    const Tensor3 b = g.tensor({4, 2, 1});
    const Eigen::MatrixXd expect = a.slice(0) * b.slice(0);
    EXPECT_LE((cosine_product(a, b).slice(0) - expect).norm(), 1e-13 * expect.norm());
}

TEST(CosineProduct, MatchesIndependentKroneckerOracle) {
    Gen g(7);
    const Tensor3 a = g.tensor({3, 2, 4});
    const Tensor3 b = g.tensor({2, 2, 4});
    EXPECT_LE(rel_diff(cosine_product(a, b), ctk::test::product_kron(a, b)), 1e-10);
}

TEST(CosineProduct, DimensionErrors) {
    EXPECT_THROW(cosine_product(Tensor3(2, 3, 2), Tensor3(2, 3, 2)), DimensionError);
    EXPECT_THROW(cosine_product(Tensor3(2, 3, 2), Tensor3(3, 3, 4)), DimensionError);
}

TEST(Oracle, SingleSliceIsMatrixProduct) {
    Gen g(8);
    const Tensor3 a = g.tensor({3, 4, 1});
    const Tensor3 b = g.tensor({4, 2, 1});
    EXPECT_LE((oracle::product(a, b).slice(0) - a.slice(0) * b.slice(0)).norm(), 1e-13);
}

TEST(Oracle, MatAgreesWithKroneckerSumConstruction) {
    Gen g(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Tensor3 a = g.tensor(g.dims(1, 5));
        EXPECT_EQ(oracle::mat(a), ctk::test::mat_kron(a));
    }
}

TEST(Oracle, TenInvertsMat) {
    Gen g(10);
    const Tensor3 a = g.tensor({3, 2, 5});
    const Tensor3 back = oracle::ten(oracle::mat(a), 3, 2, 5);
    EXPECT_LE(rel_diff(back, a), 1e-14);
    EXPECT_LE(rel_diff(oracle::mat(back), oracle::mat(a)), 1e-14);
}

TEST(Oracle, SizeGuard) {
    EXPECT_THROW(oracle::mat(Tensor3(10, 10, 10), 50), DimensionError);
    EXPECT_NO_THROW(oracle::mat(Tensor3(5, 5, 10), 50));
}

TEST(Transpose, Involution) {
    Gen g(12);
    const Tensor3 a = g.tensor({3, 5, 4});
    EXPECT_EQ(transpose(transpose(a)), a);
    EXPECT_EQ(transpose(a).dims(), (Dims{5, 3, 4}));
}

TEST(Transpose, MatOfTransposeIsTransposeOfMat) {
    Gen g(13);
    const Tensor3 a = g.tensor({3, 2, 3});
    EXPECT_EQ(oracle::mat(transpose(a)), Eigen::MatrixXd(oracle::mat(a).transpose()));
}

TEST(Inner, ExamplesAndErrors) {
    const Tensor3 ones = Tensor3::constant({2, 2, 2}, 1.0);
    EXPECT_DOUBLE_EQ(inner(ones, ones), 8.0);
    EXPECT_DOUBLE_EQ(fro_norm(ones), std::sqrt(8.0));
    EXPECT_DOUBLE_EQ(fro_norm(Tensor3(3, 3, 3)), 0.0);
    EXPECT_THROW((void)inner(Tensor3(2, 2, 2), Tensor3(2, 2, 3)), DimensionError);
}

TEST(IdentityTensor, SingleSliceIsIdentityMatrix) {
    const Tensor3 id = identity_tensor(4, 1);
    EXPECT_EQ(Eigen::MatrixXd(id.slice(0)), Eigen::MatrixXd::Identity(4, 4));
    EXPECT_THROW(identity_tensor(0, 2), DimensionError);
}

TEST(IdentityTensor, LeftAndRightIdentity) {
    Gen g(14);
    const Tensor3 a = g.tensor({3, 4, 5});
    EXPECT_LE(rel_diff(cosine_product(identity_tensor(3, 5), a), a), 1e-12);
    EXPECT_LE(rel_diff(cosine_product(a, identity_tensor(4, 5)), a), 1e-12);
}

TEST(CosineProductAdjoint, MatchesTransposeOfMat) {
    Gen g(15);
    const Tensor3 a = g.tensor({3, 2, 4});
    const Tensor3 y = g.tensor({3, 5, 4});
    const Tensor3 x = g.tensor({2, 5, 4});
    // <A*X, Y> = <X, adj(Y)>
    const double lhs = inner(cosine_product(a, x), y);
    const double rhs = inner(x, cosine_product_adjoint(a, y));
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(lhs)));
}

// Property tests over random shapes.

TEST(TensorCoreProperties, OracleEquivalence) {
    Gen g(100);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n1 = g.extent(1, 6), n2 = g.extent(1, 6), m = g.extent(1, 6), n3 = g.extent(1, 6);
        const Tensor3 a = g.tensor({n1, n2, n3});
        const Tensor3 b = g.tensor({n2, m, n3});
        const Tensor3 c = cosine_product(a, b);
        ASSERT_LE(rel_diff(c, oracle::product(a, b)), 1e-10) << "trial " << trial;
        ASSERT_LE(rel_diff(c, ctk::test::product_kron(a, b)), 1e-10) << "trial " << trial;
    }
}

TEST(TensorCoreProperties, TransformRoundTrip) {
    Gen g(101);
    for (int trial = 0; trial < 100; ++trial) {
        const Tensor3 a = g.tensor(g.dims(1, 7));
        const TubeTransform t = make_transform(a.tubes());
        const Tensor3 back = transform_mode3(transform_mode3(a, t, TransformDirection::forward), t,
                                             TransformDirection::inverse);
        ASSERT_LE(fro_norm(back - a), 1e-12 * fro_norm(a));
    }
}

TEST(TensorCoreProperties, Associativity) {
    Gen g(102);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n3 = g.extent(1, 5);
        const std::size_t a1 = g.extent(1, 5), a2 = g.extent(1, 5), a3 = g.extent(1, 5), a4 = g.extent(1, 5);
        const Tensor3 a = g.tensor({a1, a2, n3});
        const Tensor3 b = g.tensor({a2, a3, n3});
        const Tensor3 c = g.tensor({a3, a4, n3});
        const Tensor3 left = cosine_product(cosine_product(a, b), c);
        ASSERT_LE(rel_diff(left, cosine_product(a, cosine_product(b, c))), 1e-9);
        ASSERT_LE(rel_diff(left, oracle::product(a, oracle::product(b, c))), 1e-9);
    }
}

TEST(TensorCoreProperties, TransposeContract) {
    Gen g(103);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n1 = g.extent(1, 5), n2 = g.extent(1, 5), m = g.extent(1, 5), n3 = g.extent(1, 5);
        const Tensor3 a = g.tensor({n1, n2, n3});
        const Tensor3 b = g.tensor({n2, m, n3});
        ASSERT_EQ(oracle::mat(transpose(a)), Eigen::MatrixXd(oracle::mat(a).transpose()));
        const Tensor3 lhs = transpose(cosine_product(a, b));
        ASSERT_LE(rel_diff(lhs, cosine_product(transpose(b), transpose(a))), 1e-10);
        ASSERT_LE(rel_diff(lhs, oracle::product(transpose(b), transpose(a))), 1e-10);
    }
}

TEST(TensorCoreProperties, IdentityLaws) {
    Gen g(104);
    for (int trial = 0; trial < 50; ++trial) {
        const Tensor3 a = g.tensor(g.dims(1, 6));
        ASSERT_LE(rel_diff(cosine_product(identity_tensor(a.rows(), a.tubes()), a), a), 1e-12);
        ASSERT_LE(rel_diff(cosine_product(a, identity_tensor(a.cols(), a.tubes())), a), 1e-12);
    }
}

TEST(TensorCoreProperties, NormHomogeneityAndCauchySchwarz) {
    Gen g(105);
    for (int trial = 0; trial < 100; ++trial) {
        const Dims d = g.dims(1, 6);
        const Tensor3 a = g.tensor(d);
        const Tensor3 b = g.tensor(d);
        const double alpha = g.uniform(-5.0, 5.0);
        ASSERT_NEAR(fro_norm(alpha * a), std::abs(alpha) * fro_norm(a), 1e-12 * fro_norm(a) * 5.0);
        ASSERT_LE(std::abs(inner(a, b)), fro_norm(a) * fro_norm(b) * (1.0 + 1e-14));
        ASSERT_DOUBLE_EQ(inner(a, b), inner(b, a));
        ASSERT_NEAR(inner(a, a), fro_norm(a) * fro_norm(a), 1e-12 * inner(a, a));
    }
}
