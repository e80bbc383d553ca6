#include "ctk/krylov.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ctk/cproduct.hpp"
#include "ctk/error.hpp"

namespace ctk {
namespace {

constexpr double kReorthRatio = 0.70710678118654752440;  // 1/sqrt(2)

// One classical Gram-Schmidt sweep; returns the removed coefficients.
Eigen::VectorXd reorthogonalize(Tensor3& w, std::span<const Tensor3> basis) {
    Eigen::VectorXd c(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) c(static_cast<Eigen::Index>(i)) = inner(basis[i], w);
    for (std::size_t i = 0; i < basis.size(); ++i) w.add_scaled(-c(static_cast<Eigen::Index>(i)), basis[i]);
    return c;
}

void require_finite_scalar(double x, const char* where) {
    if (!std::isfinite(x)) throw NumericError(std::string(where) + ": non-finite value");
}

}  // namespace

ArnoldiDecomposition arnoldi(const LinearTensorOperator& op, const Tensor3& seed, std::size_t m) {
    if (!op.is_square()) throw DimensionError("arnoldi: operator must be square");
    if (m == 0) throw DimensionError("arnoldi: m must be positive");
    require_same_dims(seed, Tensor3(op.domain_dims()), "arnoldi seed");
    require_finite(seed, "arnoldi seed");

    ArnoldiDecomposition out;
    out.beta = fro_norm(seed);
    if (out.beta == 0.0) throw NumericError("arnoldi: zero seed");

    std::vector<Tensor3> v;
    v.reserve(m + 1);
    v.push_back((1.0 / out.beta) * seed);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m + 1),
                                              static_cast<Eigen::Index>(m));

    std::size_t steps = m;
    for (std::size_t j = 0; j < m; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        Tensor3 w = op.apply(v[j]);
        const double pre = fro_norm(w);
        for (std::size_t i = 0; i <= j; ++i) {
            const double hij = inner(v[i], w);
            h(static_cast<Eigen::Index>(i), jj) = hij;
            w.add_scaled(-hij, v[i]);
        }
        double post = fro_norm(w);
        if (post < kReorthRatio * pre) {
            const Eigen::VectorXd c = reorthogonalize(w, std::span<const Tensor3>(v).first(j + 1));
            h.col(jj).head(static_cast<Eigen::Index>(j + 1)) += c;
            post = fro_norm(w);
        }
        require_finite_scalar(post, "arnoldi");
        if (post <= kBreakdownTolerance * pre) {
            h(jj + 1, jj) = 0.0;
            out.breakdown_step = j + 1;
            steps = j + 1;
            break;
        }
        h(jj + 1, jj) = post;
        v.push_back((1.0 / post) * w);
    }

    out.hessenberg = h.topLeftCorner(static_cast<Eigen::Index>(steps + 1), static_cast<Eigen::Index>(steps));
    out.basis = TensorBasis(std::move(v));
    return out;
}

BidiagDecomposition golub_kahan(const LinearTensorOperator& op, const Tensor3& c, std::size_t m) {
    if (m == 0) throw DimensionError("golub_kahan: m must be positive");
    require_same_dims(c, Tensor3(op.range_dims()), "golub_kahan rhs");
    require_finite(c, "golub_kahan rhs");

    BidiagDecomposition out;
    out.beta1 = fro_norm(c);
    if (out.beta1 == 0.0) throw NumericError("golub_kahan: zero right-hand side");

    std::vector<Tensor3> u;
    std::vector<Tensor3> v;
    std::vector<double> alpha;
    std::vector<double> beta;  // beta[j] holds beta_{j+2}
    u.push_back((1.0 / out.beta1) * c);

    Tensor3 vt = op.apply_adjoint(u[0]);
    const double pre_v0 = fro_norm(vt);
    require_finite_scalar(pre_v0, "golub_kahan");
    if (pre_v0 == 0.0) {
        out.breakdown_step = 0;
        out.bidiag = Eigen::MatrixXd::Zero(1, 0);
        out.u_basis = TensorBasis(std::move(u));
        return out;
    }
    alpha.push_back(pre_v0);
    v.push_back((1.0 / pre_v0) * vt);

    for (std::size_t j = 0; j < m; ++j) {
        Tensor3 ut = op.apply(v[j]);
        const double pre_u = fro_norm(ut);
        ut.add_scaled(-alpha[j], u[j]);
        double b = fro_norm(ut);
        if (b < kReorthRatio * pre_u) {
            reorthogonalize(ut, u);
            b = fro_norm(ut);
        }
        require_finite_scalar(b, "golub_kahan");
        if (b <= kBreakdownTolerance * pre_u) {
            beta.push_back(0.0);
            out.breakdown_step = j + 1;
            break;
        }
        beta.push_back(b);
        u.push_back((1.0 / b) * ut);

        Tensor3 w = op.apply_adjoint(u[j + 1]);
        const double pre_v = fro_norm(w);
        w.add_scaled(-b, v[j]);
        double a = fro_norm(w);
        if (a < kReorthRatio * pre_v) {
            reorthogonalize(w, v);
            a = fro_norm(w);
        }
        require_finite_scalar(a, "golub_kahan");
        if (a <= kBreakdownTolerance * pre_v) {
            out.alpha_next = 0.0;
            if (j + 1 < m) out.breakdown_step = j + 1;
            break;
        }
        if (j + 1 == m) out.alpha_next = a;
        alpha.push_back(a);
        v.push_back((1.0 / a) * w);
    }

    const std::size_t steps = beta.size();
    Eigen::MatrixXd cm = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(steps + 1),
                                               static_cast<Eigen::Index>(steps));
    for (std::size_t j = 0; j < steps; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        cm(jj, jj) = alpha[j];
        cm(jj + 1, jj) = beta[j];
    }
    out.bidiag = std::move(cm);
    out.u_basis = TensorBasis(std::move(u));
    out.v_basis = TensorBasis(std::move(v));
    return out;
}

}  // namespace ctk
