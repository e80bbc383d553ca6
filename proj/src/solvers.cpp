#include "ctk/solvers.hpp"

#include <cmath>
#include <string>

#include "ctk/basis.hpp"
#include "ctk/cproduct.hpp"
#include "ctk/error.hpp"
#include "ctk/krylov.hpp"

namespace ctk {

void SolverConfig::validate() const {
    if (restart_m == 0) throw DimensionError("SolverConfig: restart_m must be >= 1");
    if (max_outer_iterations == 0) throw DimensionError("SolverConfig: max_outer_iterations must be >= 1");
    if (max_inner_steps == 0) throw DimensionError("SolverConfig: max_inner_steps must be >= 1");
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw NumericError("SolverConfig: tolerance must be positive and finite");
    }
    if (lambda_mode == LambdaMode::fixed && (!(fixed_lambda >= 0.0) || !std::isfinite(fixed_lambda))) {
        throw NumericError("SolverConfig: fixed lambda must be nonnegative and finite");
    }
}

SolverConfig SolverConfig::gmres_defaults() { return SolverConfig{}; }

SolverConfig SolverConfig::gk_defaults() {
    SolverConfig c;
    c.max_inner_steps = 20;
    return c;
}

SolverConfig SolverConfig::lsqr_defaults() {
    SolverConfig c;
    c.max_inner_steps = 50;
    return c;
}

std::string_view termination_name(Termination t) {
    switch (t) {
        case Termination::tolerance: return "tolerance";
        case Termination::max_iter: return "max_iter";
        case Termination::breakdown: return "breakdown";
        case Termination::lcurve_corner: return "lcurve_corner";
    }
    return "unknown";
}

namespace {

double select_lambda(const ProjectedProblem& p, const SolverConfig& cfg) {
    if (cfg.lambda_mode == LambdaMode::fixed) return cfg.fixed_lambda;
    return minimize_gcv(GcvCurve::from_problem(p), cfg.gcv);
}

double relative(double r, double scale) { return scale > 0.0 ? r / scale : r; }

void check_finite(double x, const char* where, std::size_t iteration) {
    if (!std::isfinite(x)) {
        throw NumericError(std::string(where) + ": non-finite value at iteration " +
                           std::to_string(iteration));
    }
}

}  // namespace

SolverReport dc_gmres(const LinearTensorOperator& op, const Tensor3& c, const Tensor3& x0,
                      const SolverConfig& cfg) {
    cfg.validate();
    if (!op.is_square()) throw DimensionError("dc_gmres: operator must be square");
    if (c.dims() != op.range_dims()) throw DimensionError("dc_gmres: rhs dims " + c.dims().to_string());
    if (x0.dims() != op.domain_dims()) throw DimensionError("dc_gmres: x0 dims " + x0.dims().to_string());
    require_finite(c, "dc_gmres rhs");
    require_finite(x0, "dc_gmres x0");

    SolverReport rep(x0);
    const double norm_c = fro_norm(c);
    Tensor3 r = c - op.apply(rep.solution);
    double rnorm = fro_norm(r);
    rep.initial_residual = rnorm;

    for (std::size_t cycle = 1;; ++cycle) {
        if (rnorm == 0.0 || relative(rnorm, norm_c) < cfg.tolerance) {
            rep.termination_reason = Termination::tolerance;
            break;
        }
        if (cycle > cfg.max_outer_iterations) {
            rep.termination_reason = Termination::max_iter;
            break;
        }
        const ArnoldiDecomposition ar = arnoldi(op, r, cfg.restart_m);
        const ProjectedProblem p{ar.hessenberg, ar.beta};
        const double lambda = select_lambda(p, cfg);
        const Eigen::VectorXd y = tikhonov_solve(p, lambda);
        rep.solution += basis_combine(ar.basis.leading(ar.steps()), y);

        r = c - op.apply(rep.solution);
        rnorm = fro_norm(r);
        check_finite(rnorm, "dc_gmres", cycle);
        rep.residual_history.push_back(rnorm);
        rep.lambda_history.push_back(lambda);
        rep.solution_norm_history.push_back(fro_norm(rep.solution));
        rep.iterations_used = cycle;
        if (cfg.observer) cfg.observer(cycle, rep.solution);

        if (ar.breakdown_step) {
            rep.termination_reason = relative(rnorm, norm_c) < cfg.tolerance || rnorm == 0.0
                                         ? Termination::tolerance
                                         : Termination::breakdown;
            break;
        }
    }
    return rep;
}

SolverReport dc_gk(const LinearTensorOperator& op, const Tensor3& c, const SolverConfig& cfg) {
    cfg.validate();
    const BidiagDecomposition gk = golub_kahan(op, c, cfg.max_inner_steps);
    SolverReport rep(Tensor3(op.domain_dims()));
    rep.initial_residual = gk.beta1;
    if (gk.steps() == 0) {
        rep.residual_history.push_back(gk.beta1);
        rep.solution_norm_history.push_back(0.0);
        rep.termination_reason = Termination::breakdown;
        return rep;
    }
    const ProjectedProblem p{gk.bidiag, gk.beta1};
    const double lambda = select_lambda(p, cfg);
    const Eigen::VectorXd y = tikhonov_solve(p, lambda);
    rep.solution = basis_combine(gk.v_basis.leading(gk.steps()), y);
    require_finite(rep.solution, "dc_gk solution");

    rep.residual_history.push_back(fro_norm(c - op.apply(rep.solution)));
    rep.lambda_history.push_back(lambda);
    rep.solution_norm_history.push_back(fro_norm(rep.solution));
    rep.iterations_used = gk.steps();
    if (cfg.observer) cfg.observer(1, rep.solution);
    rep.termination_reason = gk.breakdown_step ? Termination::breakdown : Termination::max_iter;
    return rep;
}

namespace {

struct LsqrRun {
    Tensor3 x;
    std::vector<double> residuals;  // |phi_bar_{k+1}|
    std::vector<double> x_norms;    // ||X_k||
    Termination reason = Termination::max_iter;
};

// Streaming bidiagonalization and plane-rotation updates; nothing but the current
// vectors is kept.
LsqrRun lsqr_run(const LinearTensorOperator& op, const Tensor3& c, std::size_t steps, double tol,
                 const std::function<void(std::size_t, const Tensor3&)>& observer) {
    const double beta1 = fro_norm(c);
    if (beta1 == 0.0) throw NumericError("dc_lsqr: zero right-hand side");
    LsqrRun run{Tensor3(op.domain_dims()), {}, {}, Termination::max_iter};

    Tensor3 u = (1.0 / beta1) * c;
    Tensor3 v = op.apply_adjoint(u);
    double alpha = fro_norm(v);
    check_finite(alpha, "dc_lsqr", 0);
    if (alpha == 0.0) {
        run.reason = Termination::breakdown;
        return run;
    }
    v *= 1.0 / alpha;

    Tensor3 p(op.domain_dims());
    double rho_bar = alpha;
    double phi_bar = beta1;
    double theta = 0.0;

    for (std::size_t j = 1; j <= steps; ++j) {
        Tensor3 ut = op.apply(v);
        const double pre_u = fro_norm(ut);
        ut.add_scaled(-alpha, u);
        double beta = fro_norm(ut);
        check_finite(beta, "dc_lsqr", j);
        bool breakdown = false;
        double alpha_next = 0.0;
        Tensor3 v_next(op.domain_dims());
        if (beta <= kBreakdownTolerance * pre_u) {
            beta = 0.0;
            breakdown = true;
        } else {
            u = (1.0 / beta) * ut;
            v_next = op.apply_adjoint(u);
            const double pre_v = fro_norm(v_next);
            v_next.add_scaled(-beta, v);
            alpha_next = fro_norm(v_next);
            check_finite(alpha_next, "dc_lsqr", j);
            if (alpha_next <= kBreakdownTolerance * pre_v) {
                alpha_next = 0.0;
                breakdown = true;
            } else {
                v_next *= 1.0 / alpha_next;
            }
        }

        const double rho = std::hypot(rho_bar, beta);
        const double cs = rho_bar / rho;
        const double sn = beta / rho;
        const double phi = cs * phi_bar;
        phi_bar = -sn * phi_bar;

        // P_j = (V_j - theta_j P_{j-1}) / rho_j
        p *= -theta;
        p += v;
        p *= 1.0 / rho;
        run.x.add_scaled(phi, p);

        theta = sn * alpha_next;
        rho_bar = cs * alpha_next;
        alpha = alpha_next;
        v = std::move(v_next);

        const double xn = fro_norm(run.x);
        check_finite(xn, "dc_lsqr", j);
        run.residuals.push_back(std::abs(phi_bar));
        run.x_norms.push_back(xn);
        if (observer) observer(j, run.x);

        if (breakdown) {
            run.reason = Termination::breakdown;
            break;
        }
        if (std::abs(phi_bar) < tol * beta1) {
            run.reason = Termination::tolerance;
            break;
        }
    }
    return run;
}

}  // namespace

SolverReport dc_lsqr(const LinearTensorOperator& op, const Tensor3& c, const SolverConfig& cfg) {
    cfg.validate();
    if (c.dims() != op.range_dims()) throw DimensionError("dc_lsqr: rhs dims " + c.dims().to_string());
    require_finite(c, "dc_lsqr rhs");

    LsqrRun run = lsqr_run(op, c, cfg.max_inner_steps, cfg.tolerance, cfg.observer);
    SolverReport rep(Tensor3(op.domain_dims()));
    rep.initial_residual = fro_norm(c);
    rep.residual_history = run.residuals;
    rep.solution_norm_history = run.x_norms;
    rep.iterations_used = run.residuals.size();
    rep.termination_reason = run.reason;
    rep.k_opt = rep.iterations_used;

    const bool corner_possible = run.residuals.size() >= 3 && run.residuals.back() > 0.0 &&
                                 run.x_norms.front() > 0.0;
    if (cfg.k_opt_mode == KoptMode::lcurve && corner_possible) {
        std::vector<LCurvePoint> pts;
        pts.reserve(run.residuals.size());
        for (std::size_t i = 0; i < run.residuals.size(); ++i) {
            pts.push_back({run.residuals[i], run.x_norms[i]});
        }
        const std::size_t k = lcurve_corner(pts).index + 1;
        rep.k_opt = k;
        rep.iterations_used = k;
        rep.termination_reason = Termination::lcurve_corner;
        if (k != run.residuals.size()) run = lsqr_run(op, c, k, cfg.tolerance, {});
    }
    rep.solution = std::move(run.x);
    return rep;
}

}  // namespace ctk
