#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctk/checks.hpp"
#include "ctk/imaging.hpp"
#include "ctk/solvers.hpp"
#include "run_config.hpp"

namespace ctk::cli {

/// Builds the blur problem described by cfg.problem (deterministic in the seed).
BlurProblem build_problem(const RunConfig& cfg);

/// Hex digest of the observed tensor's bytes.
std::string problem_hash(const BlurProblem& p);

struct SynthResult {
    BlurProblem problem;
    std::string hash;
};

/// Writes truth/blurred/observed tensors (CT3, and PNG when enabled) and manifest.ini.
SynthResult cmd_synth(const RunConfig& cfg, std::ostream& log);

struct SolveOutcome {
    std::string method;
    SolverReport report;
    double snr = 0.0;
    double relative_error = 0.0;
    double seconds = 0.0;
};

SolveOutcome run_solver(const std::string& name, const BlurProblem& p, const RunConfig& cfg);

/// Runs cfg.solver, writes restored image, history.csv and summary.csv, prints the
/// summary row.
SolveOutcome cmd_deblur(const RunConfig& cfg, std::ostream& log);

struct BenchRow {
    std::string method;
    std::string problem_hash;
    std::optional<SolveOutcome> outcome;
    std::string error;
};

/// One row per cfg.bench_solvers entry on a single problem instance; solver failures are
/// recorded in the row. Writes bench.csv when CSV output is enabled.
std::vector<BenchRow> cmd_bench(const RunConfig& cfg, std::ostream& log);

/// Prints one line per check; returns whether the suite passed.
bool cmd_check(CheckLevel level, std::ostream& log, const CheckHooks& hooks = default_check_hooks());

}  // namespace ctk::cli
