#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "ctk/linear_operator.hpp"
#include "ctk/regularization.hpp"
#include "ctk/tensor3.hpp"

namespace ctk {

enum class LambdaMode { gcv, fixed };
enum class KoptMode { fixed, lcurve };

struct SolverConfig {
    std::size_t restart_m = 10;
    std::size_t max_outer_iterations = 10;
    double tolerance = 1e-6;
    /// GK subspace dimension, LSQR step cap.
    std::size_t max_inner_steps = 20;
    LambdaMode lambda_mode = LambdaMode::gcv;
    double fixed_lambda = 0.0;
    std::uint64_t rng_seed = 0;
    KoptMode k_opt_mode = KoptMode::fixed;
    GcvOptions gcv{};
    /// Called with (iteration, iterate) after every outer iteration; LSQR reports each step
    /// of its main run only.
    std::function<void(std::size_t, const Tensor3&)> observer;

    /// Throws DimensionError or NumericError on out-of-range fields.
    void validate() const;

    static SolverConfig gmres_defaults();
    static SolverConfig gk_defaults();
    static SolverConfig lsqr_defaults();
};

enum class Termination { tolerance, max_iter, breakdown, lcurve_corner };

std::string_view termination_name(Termination t);

struct SolverReport {
    Tensor3 solution;
    /// ||C - op(X)|| after each outer iteration (GMRES cycle, GK solve, LSQR step).
    std::vector<double> residual_history;
    /// One entry per GMRES cycle or GK solve; empty for LSQR.
    std::vector<double> lambda_history;
    std::vector<double> solution_norm_history;
    double initial_residual = 0.0;
    std::size_t iterations_used = 0;
    Termination termination_reason = Termination::max_iter;
    /// LSQR only: the step whose iterate is returned.
    std::optional<std::size_t> k_opt;

    explicit SolverReport(Tensor3 x) : solution(std::move(x)) {}
    double final_residual() const {
        return residual_history.empty() ? initial_residual : residual_history.back();
    }
};

/// Restarted GMRES(m) with Tikhonov regularization of each projected problem.
SolverReport dc_gmres(const LinearTensorOperator& op, const Tensor3& c, const Tensor3& x0,
                      const SolverConfig& cfg);

/// Golub-Kahan bidiagonalization to cfg.max_inner_steps followed by one projected Tikhonov
/// solve.
SolverReport dc_gk(const LinearTensorOperator& op, const Tensor3& c, const SolverConfig& cfg);

/// LSQR from X_0 = 0. With KoptMode::lcurve the iteration runs to the step cap, the
/// returned iterate is the L-curve corner of the (|phi_bar|, ||X_k||) history and the
/// histories still cover every step taken.
SolverReport dc_lsqr(const LinearTensorOperator& op, const Tensor3& c, const SolverConfig& cfg);

}  // namespace ctk
