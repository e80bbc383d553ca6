#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ctk/solvers.hpp"

namespace ctk::cli {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ProblemConfig {
    std::optional<std::filesystem::path> image;
    std::string pattern = "disk";
    std::size_t size = 64;
    double sigma = 4.0;
    std::size_t band = 6;
    Eigen::Matrix3d mixing;
    double noise = 1e-3;
    std::uint64_t seed = 0;

    ProblemConfig();
};

struct RunConfig {
    ProblemConfig problem;

    std::string solver = "gk";
    std::size_t restart = 10;
    std::size_t outer = 10;
    std::optional<std::size_t> steps;
    double tol = 1e-6;
    /// Empty means GCV.
    std::optional<double> lambda;
    /// Empty means the solver's step count; 0 means L-curve.
    std::optional<std::size_t> kopt;
    std::vector<std::string> bench_solvers{"gmres", "gk", "lsqr"};

    std::filesystem::path out_dir = "out";
    bool write_images = true;
    bool write_csv = true;

    /// Throws ConfigError on out-of-range values or missing input files.
    void validate() const;

    /// Solver settings for gmres, gk or lsqr with this config's overrides applied.
    SolverConfig solver_config(const std::string& name) const;
};

/// Reads an INI document with [problem], [solver], [bench] and [output] sections into cfg.
/// Keys absent from the file keep their current values.
void apply_config_file(const std::filesystem::path& path, RunConfig& cfg);

/// "gcv" -> empty, otherwise a nonnegative number.
std::optional<double> parse_lambda(const std::string& text);
/// "lcurve" -> 0, otherwise a positive integer.
std::size_t parse_kopt(const std::string& text);
Eigen::Matrix3d parse_mixing(const std::string& text);
std::string format_mixing(const Eigen::Matrix3d& m);

bool is_solver_name(const std::string& name);
/// Table label, e.g. "DC-GMRES(10)".
std::string method_label(const std::string& name, const RunConfig& cfg);

}  // namespace ctk::cli
