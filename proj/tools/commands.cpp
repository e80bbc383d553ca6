#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string_view>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "ctk/cproduct.hpp"
#include "ctk/ct3_io.hpp"
#include "ctk/error.hpp"
#include "ctk/patterns.hpp"

namespace ctk::cli {
namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

void write_history(const std::filesystem::path& path, const SolverReport& r) {
    auto out = open_out(path);
    out << "iteration,residual,lambda,solution_norm\n";
    for (std::size_t i = 0; i < r.residual_history.size(); ++i) {
        out << i + 1 << ',' << fmt(r.residual_history[i]) << ','
            << (i < r.lambda_history.size() ? fmt(r.lambda_history[i]) : std::string()) << ','
            << fmt(r.solution_norm_history[i]) << '\n';
    }
}

std::string table_row(const std::string& method, double snr_db, double rel, double seconds) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-14s & %6.2f & %.2e & %.3f", method.c_str(), snr_db, rel, seconds);
    return buf;
}

}  // namespace

BlurProblem build_problem(const RunConfig& cfg) {
    cfg.validate();
    const Tensor3 truth = cfg.problem.image ? load_image(*cfg.problem.image)
                                            : make_pattern(cfg.problem.pattern, cfg.problem.size);
    if (cfg.problem.band >= truth.rows()) {
        throw ConfigError("band " + std::to_string(cfg.problem.band) + " must be below image size " +
                          std::to_string(truth.rows()));
    }
    BlurParameters bp;
    bp.within1 = GaussianBlurSpec{truth.rows(), cfg.problem.sigma, cfg.problem.band};
    bp.within2 = bp.within1;
    bp.cross.mixing = cfg.problem.mixing;
    bp.noise_level = cfg.problem.noise;
    bp.seed = cfg.problem.seed;
    return make_blur_problem(truth, bp);
}

std::string problem_hash(const BlurProblem& p) {
    const auto bytes = std::as_bytes(p.observed.data());
    const std::string_view view(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << std::hash<std::string_view>{}(view);
    return out.str();
}

SynthResult cmd_synth(const RunConfig& cfg, std::ostream& log) {
    SynthResult res{build_problem(cfg), {}};
    res.hash = problem_hash(res.problem);
    const BlurProblem& p = res.problem;
    ensure_dir(cfg.out_dir);
    save_ct3(cfg.out_dir / "truth.ct3", p.ground_truth);
    save_ct3(cfg.out_dir / "blurred.ct3", p.blurred_clean);
    save_ct3(cfg.out_dir / "observed.ct3", p.observed);
    if (cfg.write_images) {
        save_image(p.ground_truth, cfg.out_dir / "truth.png");
        save_image(p.blurred_clean, cfg.out_dir / "blurred.png");
        save_image(p.observed, cfg.out_dir / "observed.png");
    }

    boost::property_tree::ptree pt;
    if (cfg.problem.image) {
        pt.put("problem.image", cfg.problem.image->string());
    } else {
        pt.put("problem.pattern", cfg.problem.pattern);
    }
    pt.put("problem.size", p.ground_truth.rows());
    pt.put("problem.sigma", fmt(cfg.problem.sigma));
    pt.put("problem.band", cfg.problem.band);
    pt.put("problem.noise", fmt(cfg.problem.noise));
    pt.put("problem.seed", cfg.problem.seed);
    pt.put("problem.mixing", format_mixing(cfg.problem.mixing));
    pt.put("computed.noise_ratio", fmt(fro_norm(p.observed - p.blurred_clean) / fro_norm(p.blurred_clean)));
    pt.put("computed.observed_relative_error", fmt(relative_error(p.observed, p.ground_truth)));
    pt.put("computed.observed_snr", fmt(snr(p.observed, p.ground_truth)));
    pt.put("computed.problem_hash", res.hash);
    try {
        boost::property_tree::write_ini((cfg.out_dir / "manifest.ini").string(), pt);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw IoError("cannot write manifest: " + e.message());
    }
    log << "wrote problem " << res.hash << " to " << cfg.out_dir.string() << "\n";
    return res;
}

SolveOutcome run_solver(const std::string& name, const BlurProblem& p, const RunConfig& cfg) {
    const SolverConfig sc = cfg.solver_config(name);
    const auto t0 = std::chrono::steady_clock::now();
    SolverReport rep = name == "gmres" ? dc_gmres(p.model.op, p.observed, Tensor3(p.observed.dims()), sc)
                       : name == "gk"  ? dc_gk(p.model.op, p.observed, sc)
                                       : dc_lsqr(p.model.op, p.observed, sc);
    const auto t1 = std::chrono::steady_clock::now();
    SolveOutcome out{method_label(name, cfg), std::move(rep), 0.0, 0.0,
                     std::chrono::duration<double>(t1 - t0).count()};
    out.snr = snr(out.report.solution, p.ground_truth);
    out.relative_error = relative_error(out.report.solution, p.ground_truth);
    return out;
}

SolveOutcome cmd_deblur(const RunConfig& cfg, std::ostream& log) {
    const BlurProblem p = build_problem(cfg);
    SolveOutcome res = run_solver(cfg.solver, p, cfg);
    ensure_dir(cfg.out_dir);
    save_ct3(cfg.out_dir / "restored.ct3", res.report.solution);
    if (cfg.write_images) save_image(res.report.solution, cfg.out_dir / "restored.png");
    if (cfg.write_csv) {
        write_history(cfg.out_dir / "history.csv", res.report);
        auto out = open_out(cfg.out_dir / "summary.csv");
        out << "method,snr,relative_error,cpu_time,iterations,k_opt,termination\n"
            << res.method << ',' << fmt(res.snr) << ',' << fmt(res.relative_error) << ','
            << fmt(res.seconds) << ',' << res.report.iterations_used << ','
            << (res.report.k_opt ? std::to_string(*res.report.k_opt) : std::string()) << ','
            << termination_name(res.report.termination_reason) << '\n';
    }
    log << "Method         &    SNR & Relative error & cpu-time\n"
        << table_row(res.method, res.snr, res.relative_error, res.seconds) << "\n"
        << "observed relative error " << relative_error(p.observed, p.ground_truth) << ", "
        << res.report.iterations_used << " iterations, "
        << termination_name(res.report.termination_reason);
    if (res.report.k_opt) log << ", k_opt " << *res.report.k_opt;
    log << "\n";
    return res;
}

std::vector<BenchRow> cmd_bench(const RunConfig& cfg, std::ostream& log) {
    const BlurProblem p = build_problem(cfg);
    const std::string hash = problem_hash(p);
    std::vector<BenchRow> rows;
    for (const auto& name : cfg.bench_solvers) {
        BenchRow row{method_label(name, cfg), hash, std::nullopt, {}};
        try {
            row.outcome = run_solver(name, p, cfg);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }

    log << "Method         &    SNR & Relative error & cpu-time\n";
    for (const auto& r : rows) {
        if (r.outcome) {
            log << table_row(r.method, r.outcome->snr, r.outcome->relative_error, r.outcome->seconds) << "\n";
        } else {
            log << r.method << "  failed: " << r.error << "\n";
        }
    }
    if (cfg.write_csv) {
        ensure_dir(cfg.out_dir);
        auto out = open_out(cfg.out_dir / "bench.csv");
        out << "method,problem_hash,snr,relative_error,cpu_time,iterations,error\n";
        for (const auto& r : rows) {
            out << r.method << ',' << r.problem_hash << ',';
            if (r.outcome) {
                out << fmt(r.outcome->snr) << ',' << fmt(r.outcome->relative_error) << ','
                    << fmt(r.outcome->seconds) << ',' << r.outcome->report.iterations_used << ",\n";
            } else {
                std::string msg = r.error;
                for (char& ch : msg) if (ch == ',' || ch == '\n') ch = ' ';
                out << ",,,," << msg << '\n';
            }
        }
    }
    return rows;
}

bool cmd_check(CheckLevel level, std::ostream& log, const CheckHooks& hooks) {
    const auto results = run_checks(level, hooks);
    for (const auto& r : results) {
        const char* status = r.passed ? "PASS" : r.expected_failure ? "XFAIL" : "FAIL";
        log << std::left << std::setw(6) << status << std::setw(42) << r.name << std::right
            << std::setw(12) << std::setprecision(3) << r.value << "  (<= " << r.threshold << ")  "
            << r.detail << "\n";
    }
    const bool ok = all_passed(results);
    log << (ok ? "all checks passed" : "some checks failed") << "\n";
    return ok;
}

}  // namespace ctk::cli
