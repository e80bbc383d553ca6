#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "ctk/imaging.hpp"
#include "ctk/patterns.hpp"

namespace ctk::cli {

ProblemConfig::ProblemConfig() : mixing(CrossChannelSpec::paper_default().mixing) {}

namespace {

template <typename T>
T parse_number(const std::string& text, const char* what) {
    T value{};
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ConfigError(std::string(what) + ": cannot parse '" + text + "'");
    }
    return value;
}

bool parse_bool(const std::string& text, const char* what) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigError(std::string(what) + ": expected a boolean, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

std::optional<double> parse_lambda(const std::string& text) {
    if (text == "gcv") return std::nullopt;
    const double v = parse_number<double>(text, "lambda");
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("lambda must be 'gcv' or a nonnegative number");
    return v;
}

std::size_t parse_kopt(const std::string& text) {
    if (text == "lcurve") return 0;
    const auto v = parse_number<std::size_t>(text, "kopt");
    if (v == 0) throw ConfigError("kopt must be 'lcurve' or a positive integer");
    return v;
}

Eigen::Matrix3d parse_mixing(const std::string& text) {
    std::istringstream in(text);
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ConfigError("mixing: expected 9 numbers in row-major order");
            m(i, j) = parse_number<double>(tok, "mixing");
        }
    }
    std::string extra;
    if (in >> extra) throw ConfigError("mixing: more than 9 numbers");
    return m;
}

std::string format_mixing(const Eigen::Matrix3d& m) {
    std::ostringstream out;
    out.precision(17);
    for (int i = 0; i < 9; ++i) out << (i ? " " : "") << m(i / 3, i % 3);
    return out.str();
}

bool is_solver_name(const std::string& name) { return name == "gmres" || name == "gk" || name == "lsqr"; }

std::string method_label(const std::string& name, const RunConfig& cfg) {
    if (name == "gmres") return "DC-GMRES(" + std::to_string(cfg.restart) + ")";
    if (name == "gk") return "DC-GK";
    return "DC-LSQR";
}

void RunConfig::validate() const {
    if (problem.image) {
        if (!std::filesystem::exists(*problem.image)) {
            throw ConfigError("image not found: " + problem.image->string());
        }
    } else {
        bool known = false;
        for (auto n : pattern_names()) known = known || n == problem.pattern;
        if (!known) throw ConfigError("unknown pattern '" + problem.pattern + "'");
        if (problem.size < 2) throw ConfigError("size must be at least 2");
    }
    if (!(problem.sigma > 0.0)) throw ConfigError("sigma must be positive");
    if (!problem.image && problem.band >= problem.size) throw ConfigError("band must be below size");
    if (!(problem.noise >= 0.0) || !std::isfinite(problem.noise)) throw ConfigError("noise must be >= 0");
    try {
        CrossChannelSpec{problem.mixing}.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (!is_solver_name(solver)) throw ConfigError("solver must be gmres, gk or lsqr, got '" + solver + "'");
    if (bench_solvers.empty()) throw ConfigError("bench needs at least one solver");
    for (const auto& s : bench_solvers) {
        if (!is_solver_name(s)) throw ConfigError("unknown bench solver '" + s + "'");
    }
    if (restart == 0) throw ConfigError("restart must be positive");
    if (outer == 0) throw ConfigError("outer iterations must be positive");
    if (steps && *steps == 0) throw ConfigError("steps must be positive");
    if (!(tol > 0.0)) throw ConfigError("tol must be positive");
}

SolverConfig RunConfig::solver_config(const std::string& name) const {
    SolverConfig c = name == "gmres" ? SolverConfig::gmres_defaults()
                     : name == "gk"  ? SolverConfig::gk_defaults()
                                     : SolverConfig::lsqr_defaults();
    c.restart_m = restart;
    c.max_outer_iterations = outer;
    c.tolerance = tol;
    c.rng_seed = problem.seed;
    if (steps) c.max_inner_steps = *steps;
    if (lambda) {
        c.lambda_mode = LambdaMode::fixed;
        c.fixed_lambda = *lambda;
    }
    if (name == "lsqr" && kopt) {
        if (*kopt == 0) {
            c.k_opt_mode = KoptMode::lcurve;
        } else {
            c.max_inner_steps = *kopt;
        }
    }
    return c;
}

void apply_config_file(const std::filesystem::path& path, RunConfig& cfg) {
    boost::property_tree::ptree pt;
    try {
        boost::property_tree::read_ini(path.string(), pt);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError("config " + path.string() + ": " + e.message() + " (line " +
                          std::to_string(e.line()) + ")");
    }
    auto get = [&](const char* key) { return pt.get_optional<std::string>(key); };

    if (auto v = get("problem.image")) cfg.problem.image = *v;
    if (auto v = get("problem.pattern")) cfg.problem.pattern = *v;
    if (auto v = get("problem.size")) cfg.problem.size = parse_number<std::size_t>(*v, "problem.size");
    if (auto v = get("problem.sigma")) cfg.problem.sigma = parse_number<double>(*v, "problem.sigma");
    if (auto v = get("problem.band")) cfg.problem.band = parse_number<std::size_t>(*v, "problem.band");
    if (auto v = get("problem.noise")) cfg.problem.noise = parse_number<double>(*v, "problem.noise");
    if (auto v = get("problem.seed")) cfg.problem.seed = parse_number<std::uint64_t>(*v, "problem.seed");
    if (auto v = get("problem.mixing")) cfg.problem.mixing = parse_mixing(*v);

    if (auto v = get("solver.name")) cfg.solver = *v;
    if (auto v = get("solver.restart")) cfg.restart = parse_number<std::size_t>(*v, "solver.restart");
    if (auto v = get("solver.outer")) cfg.outer = parse_number<std::size_t>(*v, "solver.outer");
    if (auto v = get("solver.steps")) cfg.steps = parse_number<std::size_t>(*v, "solver.steps");
    if (auto v = get("solver.tol")) cfg.tol = parse_number<double>(*v, "solver.tol");
    if (auto v = get("solver.lambda")) cfg.lambda = parse_lambda(*v);
    if (auto v = get("solver.kopt")) cfg.kopt = parse_kopt(*v);

    if (auto v = get("bench.solvers")) cfg.bench_solvers = split_list(*v);

    if (auto v = get("output.dir")) cfg.out_dir = *v;
    if (auto v = get("output.images")) cfg.write_images = parse_bool(*v, "output.images");
    if (auto v = get("output.csv")) cfg.write_csv = parse_bool(*v, "output.csv");
}

}  // namespace ctk::cli
