#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ctk/error.hpp"

namespace {

enum Exit { kOk = 0, kNumeric = 1, kConfig = 2, kIo = 3 };

struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> image;
    std::optional<std::string> pattern;
    std::optional<std::size_t> size;
    std::optional<double> sigma;
    std::optional<std::size_t> band;
    std::optional<double> noise;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> solver;
    std::optional<std::size_t> restart;
    std::optional<std::size_t> outer;
    std::optional<std::size_t> steps;
    std::optional<double> tol;
    std::optional<std::string> lambda;
    std::optional<std::string> kopt;
    std::optional<std::string> out;
};

void add_problem_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "INI config file; flags override its values");
    cmd->add_option("--image", f.image, "ground-truth RGB PNG");
    cmd->add_option("--pattern", f.pattern, "synthetic image: checkerboard, radial, smooth, disk");
    cmd->add_option("--size", f.size, "synthetic image size n (n x n x 3)");
    cmd->add_option("--sigma", f.sigma, "Gaussian blur width");
    cmd->add_option("--band", f.band, "Gaussian band cutoff r");
    cmd->add_option("--noise", f.noise, "noise level ||N|| / ||C||");
    cmd->add_option("--seed", f.seed, "noise seed");
    cmd->add_option("--out", f.out, "output directory");
}

void add_solver_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--solver", f.solver, "gmres, gk or lsqr");
    cmd->add_option("--restart", f.restart, "GMRES restart length m");
    cmd->add_option("--outer", f.outer, "GMRES restart cycles");
    cmd->add_option("--steps", f.steps, "GK subspace size / LSQR step cap");
    cmd->add_option("--tol", f.tol, "relative residual tolerance");
    cmd->add_option("--lambda", f.lambda, "gcv or a fixed Tikhonov parameter");
    cmd->add_option("--kopt", f.kopt, "LSQR stopping: lcurve or a fixed step count");
}

ctk::cli::RunConfig resolve(const Flags& f) {
    ctk::cli::RunConfig cfg;
    if (f.config) ctk::cli::apply_config_file(*f.config, cfg);
    if (f.image) cfg.problem.image = *f.image;
    if (f.pattern) {
        cfg.problem.pattern = *f.pattern;
        cfg.problem.image.reset();
    }
    if (f.size) cfg.problem.size = *f.size;
    if (f.sigma) cfg.problem.sigma = *f.sigma;
    if (f.band) cfg.problem.band = *f.band;
    if (f.noise) cfg.problem.noise = *f.noise;
    if (f.seed) cfg.problem.seed = *f.seed;
    if (f.solver) cfg.solver = *f.solver;
    if (f.restart) cfg.restart = *f.restart;
    if (f.outer) cfg.outer = *f.outer;
    if (f.steps) cfg.steps = *f.steps;
    if (f.tol) cfg.tol = *f.tol;
    if (f.lambda) cfg.lambda = ctk::cli::parse_lambda(*f.lambda);
    if (f.kopt) cfg.kopt = ctk::cli::parse_kopt(*f.kopt);
    if (f.out) cfg.out_dir = *f.out;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cosine-product tensor Krylov solvers for colour image deblurring"};
    app.require_subcommand(1);
    Flags f;

    auto* synth = app.add_subcommand("synth", "write a blurred, noisy test problem");
    add_problem_flags(synth, f);
    auto* deblur = app.add_subcommand("deblur", "restore a synthesized problem with one solver");
    add_problem_flags(deblur, f);
    add_solver_flags(deblur, f);
    auto* bench = app.add_subcommand("bench", "compare solvers on one problem instance");
    add_problem_flags(bench, f);
    add_solver_flags(bench, f);
    std::string level = "quick";
    auto* check = app.add_subcommand("check", "run the built-in consistency checks");
    check->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (*check) {
            const auto lvl = level == "full" ? ctk::CheckLevel::full : ctk::CheckLevel::quick;
            return ctk::cli::cmd_check(lvl, std::cout) ? kOk : kNumeric;
        }
        const ctk::cli::RunConfig cfg = resolve(f);
        if (*synth) ctk::cli::cmd_synth(cfg, std::cout);
        if (*deblur) ctk::cli::cmd_deblur(cfg, std::cout);
        if (*bench) {
            const auto rows = ctk::cli::cmd_bench(cfg, std::cout);
            for (const auto& r : rows) {
                if (!r.outcome) return kNumeric;
            }
        }
        return kOk;
    } catch (const ctk::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const ctk::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    }
}
