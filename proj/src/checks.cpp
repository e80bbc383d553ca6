#include "ctk/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "ctk/basis.hpp"
#include "ctk/cproduct.hpp"
#include "ctk/ct3_io.hpp"
#include "ctk/imaging.hpp"
#include "ctk/krylov.hpp"
#include "ctk/linear_operator.hpp"
#include "ctk/oracle.hpp"
#include "ctk/regularization.hpp"
#include "ctk/solvers.hpp"
#include "ctk/transform.hpp"

namespace ctk {

CheckHooks default_check_hooks() {
    return CheckHooks{[](const Tensor3& a) { return transpose(a); }};
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed || r.expected_failure; });
}

Tensor3 random_well_conditioned(std::size_t n, std::size_t p, std::uint64_t seed) {
    Tensor3 g = Tensor3::random_normal(Dims{n, n, p}, seed);
    g *= 0.3 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < p; ++k) g.slice(k) += Eigen::MatrixXd::Identity(n, n);
    return transform_mode3(g, make_transform(p), TransformDirection::inverse);
}

namespace {

double rel_diff(const Tensor3& a, const Tensor3& b) {
    const double d = fro_norm(b);
    return d > 0.0 ? fro_norm(a - b) / d : fro_norm(a - b);
}

CheckResult make(std::string name, double value, double threshold, std::string detail = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.value = value;
    r.threshold = threshold;
    r.passed = std::isfinite(value) && value <= threshold;
    r.detail = std::move(detail);
    return r;
}

Dims random_dims(std::mt19937_64& rng, std::size_t max_extent) {
    std::uniform_int_distribution<std::size_t> d(1, max_extent);
    return Dims{d(rng), d(rng), d(rng)};
}

CheckResult check_cproduct(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> d(1, 4);
    double worst = 0.0;
    for (int t = 0; t < 30; ++t) {
        const Dims da = random_dims(rng, 4);
        const Dims db{da.n2, d(rng), da.n3};
        const Tensor3 a = Tensor3::random_normal(da, rng);
        const Tensor3 b = Tensor3::random_normal(db, rng);
        worst = std::max(worst, rel_diff(cosine_product(a, b), oracle::product(a, b)));
    }
    return make("cproduct_vs_matricization", worst, 1e-10, "30 random pairs, extents <= 4");
}

CheckResult check_transpose(const CheckHooks& hooks, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        const Tensor3 a = Tensor3::random_normal(random_dims(rng, 4), rng);
        const Eigen::MatrixXd expect = oracle::mat(a).transpose();
        const Eigen::MatrixXd got = oracle::mat(hooks.transpose(a));
        worst = std::max(worst, (got - expect).norm() / expect.norm());
    }
    return make("transpose_matricization", worst, 1e-12, "mat(transpose(A)) = mat(A)^T");
}

// The product operators rebuilt on top of the hookable transpose.
LinearTensorOperator hooked_sandwich(const Tensor3& a, const Tensor3* b, std::size_t width,
                                     const CheckHooks& hooks) {
    const TubeTransform tr = make_transform(a.tubes());
    const Eigen::MatrixXd in = tr.inverse.transpose();
    const Eigen::MatrixXd out = tr.forward.transpose();
    const Tensor3 at = transform_mode3(a, tr, TransformDirection::forward);
    const Tensor3 att = hooks.transpose(at);
    if (b == nullptr) {
        const Dims dom{a.cols(), width, a.tubes()}, ran{a.rows(), width, a.tubes()};
        return LinearTensorOperator(
            dom, ran,
            [at, tr](const Tensor3& x) {
                return transform_mode3(facewise_product(at, transform_mode3(x, tr, TransformDirection::forward)),
                                       tr, TransformDirection::inverse);
            },
            [att, in, out](const Tensor3& y) {
                return apply_tube_matrix(facewise_product(att, apply_tube_matrix(y, in)), out);
            });
    }
    const Tensor3 bt = transform_mode3(*b, tr, TransformDirection::forward);
    const Tensor3 btt = hooks.transpose(bt);
    const Dims dom{a.cols(), b->rows(), a.tubes()}, ran{a.rows(), b->cols(), a.tubes()};
    return LinearTensorOperator(
        dom, ran,
        [at, bt, tr](const Tensor3& x) {
            const Tensor3 xt = transform_mode3(x, tr, TransformDirection::forward);
            return transform_mode3(facewise_product(facewise_product(at, xt), bt), tr,
                                   TransformDirection::inverse);
        },
        [att, btt, in, out](const Tensor3& y) {
            const Tensor3 yt = apply_tube_matrix(y, in);
            return apply_tube_matrix(facewise_product(facewise_product(att, yt), btt), out);
        });
}

CheckResult check_left_adjoint(const CheckHooks& hooks, std::uint64_t seed) {
    const Tensor3 a = Tensor3::random_normal(Dims{5, 4, 3}, seed);
    const double defect = adjoint_check(hooked_sandwich(a, nullptr, 2, hooks), 5, seed + 1);
    return make("left_product_adjoint", defect, 1e-10, "X -> A *c X, 5 random pairs");
}

CheckResult check_sandwich_adjoint(const CheckHooks& hooks, std::uint64_t seed) {
    const Tensor3 a = Tensor3::random_normal(Dims{5, 4, 3}, seed);
    const Tensor3 b = Tensor3::random_normal(Dims{3, 6, 3}, seed + 1);
    const double defect = adjoint_check(hooked_sandwich(a, &b, 0, hooks), 5, seed + 2);
    return make("sandwich_adjoint", defect, 1e-10, "X -> A *c X *c B, 5 random pairs");
}

CheckResult check_blur_adjoint() {
    const Eigen::MatrixXd g = gaussian_band_matrix({8, 2.0, 3});
    const BlurModel m = build_blur_operator(g, g, CrossChannelSpec::paper_default());
    return make("blur_operator_adjoint", adjoint_check(m.op, 5, 11), 1e-10, "8x8x3, sigma 2, r 3");
}

CheckResult check_ct3(std::uint64_t seed) {
    const Tensor3 a = Tensor3::random_normal(Dims{3, 4, 5}, seed);
    std::stringstream buf;
    write_ct3(buf, a);
    const Tensor3 b = read_ct3(buf);
    return make("ct3_roundtrip", a == b ? 0.0 : 1.0, 0.0, "bit-identical after write/read");
}

CheckResult check_arnoldi(std::uint64_t seed) {
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 3; ++t) {
        const Tensor3 a = Tensor3::random_normal(Dims{6, 6, 3}, seed + t);
        const LinearTensorOperator op = left_product_operator(a, 2);
        const ArnoldiDecomposition ar = arnoldi(op, Tensor3::random_normal(op.domain_dims(), seed + 100 + t), 5);
        const std::size_t m = ar.steps();
        TensorBasis applied;
        for (std::size_t j = 0; j < m; ++j) applied.push_back(op.apply(ar.basis[j]));
        const TensorBasis rhs = basis_combine(ar.basis.leading(m + 1), ar.hessenberg);
        for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, rel_diff(applied[j], rhs[j]));
        const Eigen::MatrixXd gram = diamond(ar.basis, ar.basis);
        worst = std::max(worst, (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).norm());
    }
    return make("arnoldi_relations", worst, 1e-10, "A V_m = V_{m+1} H~_m and V^T V = I, m = 5");
}

CheckResult check_golub_kahan(std::uint64_t seed) {
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 3; ++t) {
        const Tensor3 a = Tensor3::random_normal(Dims{6, 5, 3}, seed + t);
        const LinearTensorOperator op = left_product_operator(a, 2);
        const Tensor3 c = Tensor3::random_normal(op.range_dims(), seed + 100 + t);
        const BidiagDecomposition gk = golub_kahan(op, c, 5);
        const std::size_t m = gk.steps();
        const TensorBasis rhs = basis_combine(gk.u_basis.leading(m + 1), gk.bidiag);
        for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, rel_diff(op.apply(gk.v_basis[j]), rhs[j]));
        worst = std::max(worst, rel_diff(gk.beta1 * gk.u_basis[0], c));
        for (std::size_t j = 1; j <= m; ++j) {
            Tensor3 expect = gk.bidiag(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j - 1)) * gk.v_basis[j - 1];
            if (j < gk.v_basis.size()) {
                const double alpha = j < m ? gk.bidiag(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j))
                                           : gk.alpha_next;
                expect.add_scaled(alpha, gk.v_basis[j]);
            }
            worst = std::max(worst, rel_diff(op.apply_adjoint(gk.u_basis[j]), expect));
        }
    }
    return make("golub_kahan_relations", worst, 1e-10,
                "A V_m = U_{m+1} C~_m, U_{m+1}(beta_1 e_1) = C, adjoint recurrence, m = 5");
}

CheckResult check_lsqr_identity(std::uint64_t seed) {
    const Tensor3 a = Tensor3::random_normal(Dims{10, 6, 3}, seed);
    const LinearTensorOperator op = left_product_operator(a, 2);
    const Tensor3 c = Tensor3::random_normal(op.range_dims(), seed + 1);
    SolverConfig cfg = SolverConfig::lsqr_defaults();
    cfg.tolerance = 1e-300;
    double worst = 0.0;
    for (std::size_t k = 1; k <= 12; ++k) {
        cfg.max_inner_steps = k;
        const SolverReport rep = dc_lsqr(op, c, cfg);
        const double explicit_r = fro_norm(c - op.apply(rep.solution));
        worst = std::max(worst, std::abs(rep.residual_history.back() - explicit_r) / explicit_r);
    }
    return make("lsqr_residual_identity", worst, 1e-8, "|phi_bar_{k+1}| vs ||C - A X_k||, k <= 12");
}

CheckResult check_exactness(std::uint64_t seed) {
    const Tensor3 a = random_well_conditioned(8, 3, seed);
    const LinearTensorOperator op = left_product_operator(a, 2);
    const Tensor3 c = op.apply(Tensor3::random_normal(op.domain_dims(), seed + 1));
    const std::size_t full = op.domain_dims().size();
    const double nc = fro_norm(c);

    SolverConfig cfg;
    cfg.lambda_mode = LambdaMode::fixed;
    cfg.fixed_lambda = 0.0;
    cfg.tolerance = 1e-12;
    cfg.restart_m = full;
    cfg.max_outer_iterations = 1;
    cfg.max_inner_steps = full;
    const double r_gmres = fro_norm(c - op.apply(dc_gmres(op, c, Tensor3(op.domain_dims()), cfg).solution)) / nc;
    const double r_gk = fro_norm(c - op.apply(dc_gk(op, c, cfg).solution)) / nc;
    const double r_lsqr = fro_norm(c - op.apply(dc_lsqr(op, c, cfg).solution)) / nc;
    std::ostringstream d;
    d << "gmres " << r_gmres << ", gk " << r_gk << ", lsqr " << r_lsqr;
    return make("krylov_exactness", std::max({r_gmres, r_gk, r_lsqr}), 1e-8, d.str());
}

CheckResult check_gcv(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z;
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
        const Eigen::Index m = 12;
        GcvCurve c;
        c.singular_values.resize(m);
        c.transformed_rhs.resize(m + 1);
        for (Eigen::Index i = 0; i < m; ++i) {
            c.singular_values(i) = std::exp(-0.6 * static_cast<double>(i));
            c.transformed_rhs(i) = c.singular_values(i) * (1.0 + 0.1 * z(rng)) + 1e-3 * z(rng);
        }
        c.transformed_rhs(m) = 1e-3 * z(rng);
        const double got = minimize_gcv(c);
        const double lo = std::log(1e-12 * c.singular_values(0)), hi = std::log(c.singular_values(0));
        double best = 0.0, best_v = INFINITY;
        constexpr int kScan = 100000;
        for (int i = 0; i < kScan; ++i) {
            const double l = std::exp(lo + (hi - lo) * i / (kScan - 1));
            const double v = gcv_value(c, l);
            if (v < best_v) {
                best_v = v;
                best = l;
            }
        }
        worst = std::max(worst, std::abs(got - best) / best);
    }
    return make("gcv_minimizer", worst, 1e-3, "vs 1e5-point log scan");
}

CheckResult check_blur_equivalence(std::uint64_t seed) {
    const Eigen::MatrixXd g = gaussian_band_matrix({8, 2.0, 3});
    const CrossChannelSpec cross = CrossChannelSpec::paper_default();
    const BlurModel m = build_blur_operator(g, g, cross);
    const Tensor3 x = Tensor3::random_normal(Dims{8, 8, 3}, seed);
    CheckResult r = make("blur_tensor_form_vs_kronecker", rel_diff(m.op.apply(x), kron_oracle(g, g, cross, x)),
                         1e-10, "paper mixing; the cosine product applies a different channel mixing");
    r.expected_failure = true;
    return r;
}

CheckResult check_blur_effective(std::uint64_t seed) {
    const Eigen::MatrixXd g = gaussian_band_matrix({8, 2.0, 3});
    const CrossChannelSpec cross = CrossChannelSpec::paper_default();
    const BlurModel m = build_blur_operator(g, g, cross);
    CrossChannelSpec eff;
    eff.mixing = tensor_form_mixing(cross);
    const Tensor3 x = Tensor3::random_normal(Dims{8, 8, 3}, seed);
    return make("blur_tensor_form_vs_effective_kronecker",
                rel_diff(m.op.apply(x), kron_oracle(g, g, eff, x)), 1e-10,
                "Kronecker model with the tensor form's own channel mixing");
}

CheckResult check_noise(std::uint64_t seed) {
    const Tensor3 c = Tensor3::random_normal(Dims{8, 8, 3}, seed);
    const NoisyObservation o = add_noise(c, 1e-3, seed + 1);
    return make("noise_level", std::abs(fro_norm(o.noise) / fro_norm(c) - 1e-3) / 1e-3, 1e-12,
                "||N|| / ||C|| = nu");
}

}  // namespace

std::vector<CheckResult> run_checks(CheckLevel level, const CheckHooks& hooks) {
    std::vector<CheckResult> out;
    auto guarded = [&out](const char* name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            CheckResult r;
            r.name = name;
            r.value = INFINITY;
            r.detail = std::string("threw: ") + e.what();
            out.push_back(std::move(r));
        }
    };
    guarded("cproduct_vs_matricization", [] { return check_cproduct(101); });
    guarded("transpose_matricization", [&] { return check_transpose(hooks, 102); });
    guarded("left_product_adjoint", [&] { return check_left_adjoint(hooks, 103); });
    guarded("sandwich_adjoint", [&] { return check_sandwich_adjoint(hooks, 104); });
    guarded("blur_operator_adjoint", [] { return check_blur_adjoint(); });
    guarded("ct3_roundtrip", [] { return check_ct3(105); });
    if (level == CheckLevel::full) {
        guarded("arnoldi_relations", [] { return check_arnoldi(201); });
        guarded("golub_kahan_relations", [] { return check_golub_kahan(202); });
        guarded("lsqr_residual_identity", [] { return check_lsqr_identity(203); });
        guarded("krylov_exactness", [] { return check_exactness(204); });
        guarded("gcv_minimizer", [] { return check_gcv(205); });
        guarded("noise_level", [] { return check_noise(206); });
        guarded("blur_tensor_form_vs_effective_kronecker", [] { return check_blur_effective(207); });
        guarded("blur_tensor_form_vs_kronecker", [] { return check_blur_equivalence(208); });
    }
    return out;
}

}  // namespace ctk
