#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "ctk/cproduct.hpp"
#include "ctk/linear_operator.hpp"
#include "ctk/tensor3.hpp"

namespace ctk::test {

/// Seeded generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t extent(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    Dims dims(std::size_t lo, std::size_t hi) { return {extent(lo, hi), extent(lo, hi), extent(lo, hi)}; }
    Tensor3 tensor(Dims d) { return Tensor3::random_normal(d, rng_); }
    Eigen::VectorXd vector(Eigen::Index n) {
        Eigen::VectorXd v(n);
        std::normal_distribution<double> g;
        for (Eigen::Index i = 0; i < n; ++i) v(i) = g(rng_);
        return v;
    }
    Eigen::MatrixXd matrix(Eigen::Index r, Eigen::Index c) {
        Eigen::MatrixXd m(r, c);
        std::normal_distribution<double> g;
        for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng_);
        return m;
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double rel_diff(const Tensor3& a, const Tensor3& b) {
    const double den = fro_norm(b);
    const double num = fro_norm(a - b);
    return den > 0.0 ? num / den : num;
}

inline double rel_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const double den = b.norm();
    return den > 0.0 ? (a - b).norm() / den : (a - b).norm();
}

/// Toeplitz-plus-Hankel matrix of a tube, entry by entry from the scalar definition.
inline Eigen::MatrixXd th(const Eigen::VectorXd& v) {
    const Eigen::Index n = v.size();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            t(i, j) = v(std::abs(i - j));
            // Hankel part: first row (v2..vn, 0), constant along anti-diagonals,
            // mirrored so the last row is (0, vn, ..., v2).
            const Eigen::Index s = i + j;
            if (s + 1 < n) {
                t(i, j) += v(s + 1);
            } else if (s + 1 > n) {
                t(i, j) += v(2 * n - 1 - s);
            }
        }
    }
    return t;
}

/// Matricization as a Kronecker sum: sum_k th(e_k) (x) A_k.
inline Eigen::MatrixXd mat_kron(const Tensor3& a) {
    const auto n1 = static_cast<Eigen::Index>(a.rows());
    const auto n2 = static_cast<Eigen::Index>(a.cols());
    const auto n = static_cast<Eigen::Index>(a.tubes());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n1 * n, n2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::MatrixXd pattern = th(Eigen::VectorXd::Unit(n, k));
        const Eigen::MatrixXd slice = a.slice(static_cast<std::size_t>(k));
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = 0; q < n; ++q) {
                m.block(p * n1, q * n2, n1, n2) += pattern(p, q) * slice;
            }
        }
    }
    return m;
}

/// Inverse of mat_kron from the first block column.
inline Tensor3 ten_kron(const Eigen::MatrixXd& m, std::size_t n1, std::size_t n2, std::size_t n3) {
    const auto n = static_cast<Eigen::Index>(n3);
    Eigen::MatrixXd f(n, n);
    for (Eigen::Index k = 0; k < n; ++k) f.col(k) = th(Eigen::VectorXd::Unit(n, k)).col(0);
    const Eigen::MatrixXd finv = f.inverse();
    const auto r1 = static_cast<Eigen::Index>(n1);
    const auto r2 = static_cast<Eigen::Index>(n2);
    Tensor3 t(n1, n2, n3);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::MatrixXd s = Eigen::MatrixXd::Zero(r1, r2);
        for (Eigen::Index p = 0; p < n; ++p) s += finv(k, p) * m.block(p * r1, 0, r1, r2);
        t.slice(static_cast<std::size_t>(k)) = s;
    }
    return t;
}

inline Tensor3 product_kron(const Tensor3& a, const Tensor3& b) {
    return ten_kron(mat_kron(a) * mat_kron(b), a.rows(), b.cols(), a.tubes());
}

/// Dense matrix of op acting on the storage vectors of its domain and range.
inline Eigen::MatrixXd dense(const LinearTensorOperator& op, bool adjoint = false) {
    const Dims in = adjoint ? op.range_dims() : op.domain_dims();
    const Dims out = adjoint ? op.domain_dims() : op.range_dims();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(out.size()), static_cast<Eigen::Index>(in.size()));
    for (std::size_t j = 0; j < in.size(); ++j) {
        Tensor3 e(in);
        e.data()[j] = 1.0;
        const Tensor3 col = adjoint ? op.apply_adjoint(e) : op.apply(e);
        for (std::size_t i = 0; i < out.size(); ++i) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col.data()[i];
        }
    }
    return m;
}

inline Eigen::VectorXd as_vector(const Tensor3& t) {
    return Eigen::Map<const Eigen::VectorXd>(t.data().data(), static_cast<Eigen::Index>(t.size()));
}

inline Tensor3 from_vector(Dims d, const Eigen::VectorXd& v) {
    return Tensor3(d, std::vector<double>(v.data(), v.data() + v.size()));
}

}  // namespace ctk::test
