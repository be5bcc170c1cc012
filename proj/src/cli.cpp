#include "tproj/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "tproj/crosscheck.hpp"
#include "tproj/problems.hpp"
#include "tproj/serialize.hpp"

namespace tproj::cli {

namespace {

namespace fs = std::filesystem;

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
    fs::create_directories(dir);
    std::ofstream out(fs::path(dir) / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + name + " under " + dir);
    out << body;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j.at(r).size()) != cols) {
            throw std::invalid_argument("matrix: ragged rows");
        }
        for (int c = 0; c < cols; ++c) m.at(r, c) = j.at(r).at(c).get<double>();
    }
    return m;
}

// {"kind":"affine","matrix":...,"shift":...,"kappa":...} builds a tagged
// strict pseudocontraction (kappa estimated by sampling when not given);
// {"kind":"set-projection","set":...} a projection map.
Mapping operator_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "affine") {
        const Matrix m = matrix_from_json(j.at("matrix"));
        const Vector shift =
            j.contains("shift") ? vector_from_json(j.at("shift")) : Vector::zeros(m.rows());
        Mapping q = make_affine_spc(m, shift);
        if (j.contains("kappa")) q.tag = tag_spc(j.at("kappa").get<double>());
        return q;
    }
    if (kind == "set-projection") {
        return projection_map(set_from_json(j.at("set")));
    }
    throw std::invalid_argument("operator: unknown kind '" + kind + "'");
}

// Plain evaluator without class construction; used by the certifiers so
// that maps failing their class can still be audited.
Mapping raw_operator_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "affine") {
        const Matrix m = matrix_from_json(j.at("matrix"));
        const Vector shift =
            j.contains("shift") ? vector_from_json(j.at("shift")) : Vector::zeros(m.rows());
        Mapping q;
        q.dim = m.rows();
        q.f = [m, shift](const Vector& x) { return m.apply(x) + shift; };
        return q;
    }
    if (kind == "set-projection") return projection_map(set_from_json(j.at("set")));
    throw std::invalid_argument("operator: unknown kind '" + kind + "'");
}

StoppingRule stopping_from_json(const nlohmann::json& config, const Options& opts) {
    StoppingRule stop;
    if (config.contains("stopping")) {
        const auto& j = config.at("stopping");
        stop.tol_step = j.value("tol_step", stop.tol_step);
        stop.tol_residual = j.value("tol_residual", stop.tol_residual);
        stop.max_iter = j.value("max_iter", stop.max_iter);
        stop.divergence_radius = j.value("divergence_radius", stop.divergence_radius);
    }
    if (opts.max_iter) stop.max_iter = *opts.max_iter;
    if (opts.tol) stop.tol_residual = *opts.tol;
    stop.validate();
    return stop;
}

struct RunSetup {
    Driver driver = Driver::Haugazeau;
    Vector x0;
    OperatorSchedule ops;
    Schedule schedule;
    StoppingRule stop;
    std::optional<OracleTarget> oracle;
};

std::optional<OracleTarget> oracle_from_fixed_set(const std::optional<FixedSetOracle>& fs) {
    if (!fs) return std::nullopt;
    if (const auto* set = std::get_if<ConvexSet>(&*fs)) return OracleTarget{*set};
    const auto& pts = std::get<std::vector<Vector>>(*fs);
    if (pts.size() == 1) return OracleTarget{pts.front()};
    return std::nullopt;
}

RunSetup build_run(const nlohmann::json& config, const Options& opts) {
    RunSetup setup;
    const std::string driver = config.at("driver").get<std::string>();
    if (driver == "haugazeau") setup.driver = Driver::Haugazeau;
    else if (driver == "mann") setup.driver = Driver::Mann;
    else throw std::invalid_argument("driver must be 'haugazeau' or 'mann'");

    setup.x0 = vector_from_json(config.at("x0"));
    setup.stop = stopping_from_json(config, opts);

    const nlohmann::json sched = config.value("schedule", nlohmann::json::object());
    setup.schedule.epsilon = sched.value("epsilon", 0.5);
    if (setup.driver == Driver::Mann &&
        !(setup.schedule.epsilon > 0.0 && setup.schedule.epsilon <= 1.0)) {
        throw std::invalid_argument("schedule: epsilon must be in (0,1]");
    }

    const std::string variant = config.at("variant").get<std::string>();
    const nlohmann::json problem = config.at("problem");

    if (variant == "spc") {
        std::vector<Mapping> members;
        for (const auto& op : problem.at("operators")) {
            members.push_back(operator_from_json(op));
        }
        double kappa = 0.0;
        for (const Mapping& m : members) {
            if (m.tag.kind == MapClassKind::StrictPseudocontraction) {
                kappa = std::max(kappa, m.tag.param);
            }
        }
        std::vector<double> w(members.size(), 1.0 / static_cast<double>(members.size()));
        if (sched.contains("weights")) {
            w = sched.at("weights").get<std::vector<double>>();
        }
        setup.schedule.weights = [w](long) { return w; };
        const double alpha = sched.value("alpha", 0.5 * (kappa + 1.0));
        if (!(alpha > kappa && alpha < 1.0)) {
            throw std::invalid_argument("schedule: alpha must be in (kappa, 1)");
        }
        setup.schedule.alpha = [alpha](long) { return alpha; };
        auto family = make_family(members, setup.schedule.weights);
        setup.ops = [family, kappa](long n) { return t_from_q(family(n), kappa); };
        setup.oracle = oracle_from_fixed_set(family(0).fixed_set);
    } else if (variant == "extragradient" || variant == "extragradient-composed") {
        const Matrix m = matrix_from_json(problem.at("matrix"));
        const Vector q = problem.contains("shift") ? vector_from_json(problem.at("shift"))
                                                   : Vector::zeros(m.rows());
        const ConvexSet c = set_from_json(problem.at("set"));
        const int resolution = problem.value("oracle_resolution", 201);
        ProblemInstance inst = make_affine_vi(m, q, c, resolution);
        const double k = std::get<VIKind>(inst.kind).k;

        double lo = 0.1, hi = 0.9;
        if (sched.contains("lambda_bounds")) {
            lo = sched.at("lambda_bounds").at(0).get<double>();
            hi = sched.at("lambda_bounds").at(1).get<double>();
        }
        const double lambda = sched.value("lambda", 0.5 * (lo + hi) / k);
        setup.schedule.lambda = [lambda](long) { return lambda; };
        validate_lambda_schedule(setup.schedule, k, lo, hi, 1);
        VIInstance vi(c, std::get<VIKind>(inst.kind).a, lo, hi);

        if (variant == "extragradient") {
            setup.ops = [vi, lambda](long) {
                return halve_shift(extragradient_t2_map(vi, lambda));
            };
        } else {
            const nlohmann::json comp = problem.at("compose");
            const double alpha = comp.value("alpha", 0.3);
            const Mapping s = projection_map(set_from_json(comp.at("set")));
            const Mapping r = averaged_map(s, alpha);
            setup.ops = [vi, lambda, r](long) {
                return halve_shift(compose(r, extragradient_t2_map(vi, lambda)));
            };
        }
        setup.oracle = inst.oracle_solution;
    } else {
        throw std::invalid_argument("variant must be spc, extragradient or extragradient-composed");
    }

    if (config.contains("oracle")) {
        const auto& j = config.at("oracle");
        const std::string type = j.at("type").get<std::string>();
        if (type == "point") setup.oracle = OracleTarget{vector_from_json(j.at("value"))};
        else if (type == "set") setup.oracle = OracleTarget{set_from_json(j.at("value"))};
        else throw std::invalid_argument("oracle: type must be point or set");
    }
    if (setup.ops(0).dim != setup.x0.dim()) {
        throw std::invalid_argument("x0 dimension does not match the operator family");
    }
    return setup;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

int cmd_run(const nlohmann::json& config, const Options& opts) {
    RunSetup setup;
    std::uint64_t seed = 0;
    std::string basename = "trace";
    std::string format = opts.format.value_or("csv");
    try {
        seed = opts.seed.value_or(config.value("seed", std::uint64_t{0}));
        if (config.contains("output")) {
            basename = config.at("output").value("basename", basename);
        }
        if (format != "csv" && format != "json") {
            throw std::invalid_argument("format must be csv or json");
        }
        setup = build_run(config, opts);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    const IterationTrace trace =
        run(setup.driver, setup.x0, setup.ops, setup.schedule, setup.stop, setup.oracle);

    nlohmann::json echo = config;
    echo["seed"] = seed;
    write_file(opts.out_dir, basename + ".json",
               trace_sidecar(trace, echo, seed).dump(2) + "\n");
    if (format == "csv") {
        write_file(opts.out_dir, basename + ".csv", trace_to_csv(trace));
    } else {
        write_file(opts.out_dir, basename + "_records.json", trace_to_json(trace).dump(2) + "\n");
    }

    const bool converged = trace.outcome == Outcome::ConvergedStep ||
                           trace.outcome == Outcome::ConvergedResidual;
    return converged ? 0 : 2;
}

int cmd_certify(const nlohmann::json& config, const Options& opts) {
    CertReport report;
    std::string basename = "report";
    try {
        const std::string check = config.at("check").get<std::string>();
        const int dim = config.at("dim").get<int>();
        SamplePlan plan;
        plan.dim = dim;
        plan.n_samples = config.value("samples", static_cast<std::int64_t>(10000));
        plan.box_radius = config.value("box_radius", 5.0);
        plan.seed = opts.seed.value_or(config.value("seed", std::uint64_t{0}));
        if (config.contains("output")) {
            basename = config.at("output").value("basename", basename);
        }

        if (check == "spc") {
            const Mapping q = raw_operator_from_json(config.at("operator"));
            report = certify_strict_pseudocontraction(q, config.at("kappa").get<double>(), plan);
        } else if (check == "monotone-lipschitz") {
            const Mapping a = raw_operator_from_json(config.at("operator"));
            report = certify_monotone_lipschitz(a, config.at("k").get<double>(), plan);
        } else if (check == "f-quasi") {
            const Mapping t = raw_operator_from_json(config.at("operator"));
            std::vector<Vector> f_points;
            for (const auto& p : config.at("f_points")) f_points.push_back(vector_from_json(p));
            report = certify_f_quasi_nonexpansive(t, f_points, plan);
        } else if (check == "tclass") {
            Mapping t = raw_operator_from_json(config.at("operator"));
            if (config.contains("kappa")) t = t_from_q(t, config.at("kappa").get<double>());
            std::vector<Vector> fix_points;
            for (const auto& p : config.at("fix_points")) fix_points.push_back(vector_from_json(p));
            report = certify_tclass(t, fix_points, plan);
        } else if (check == "vi-solution") {
            const Mapping a = raw_operator_from_json(config.at("operator"));
            const ConvexSet c = set_from_json(config.at("set"));
            report = certify_vi_solution(c, a, vector_from_json(config.at("solution")), plan);
        } else {
            throw std::invalid_argument("unknown check '" + check + "'");
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    write_file(opts.out_dir, basename + ".json", report_to_json(report).dump(2) + "\n");
    std::cout << report.check << ": " << (report.passed ? "pass" : "fail")
              << " (worst margin " << format_double(report.worst_margin) << ")\n";
    return report.passed ? 0 : 2;
}

int cmd_crosscheck(const nlohmann::json& config, const Options& opts) {
    CrosscheckSummary summary;
    std::string basename = "crosscheck";
    try {
        const std::string suite = config.at("suite").get<std::string>();
        const std::uint64_t seed = opts.seed.value_or(config.value("seed", std::uint64_t{0}));
        if (config.contains("output")) {
            basename = config.at("output").value("basename", basename);
        }
        if (suite == "haugazeau-vs-qp") {
            int dim_lo = 2, dim_hi = 6;
            if (config.contains("dims")) {
                dim_lo = config.at("dims").at(0).get<int>();
                dim_hi = config.at("dims").at(1).get<int>();
            }
            summary = crosscheck_haugazeau_vs_qp(
                config.value("cases", static_cast<std::int64_t>(10000)), dim_lo, dim_hi, seed);
        } else if (suite == "lemma1-membership") {
            summary = crosscheck_lemma1_membership(
                config.value("steps", static_cast<std::int64_t>(100)),
                config.value("probes", static_cast<std::int64_t>(1000)),
                config.value("alphas", 3), seed);
        } else if (suite == "vi-oracle") {
            summary = crosscheck_vi_oracle(config.value("resolution", 201));
        } else {
            throw std::invalid_argument("unknown suite '" + suite + "'");
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    nlohmann::json j;
    j["suite"] = summary.suite;
    j["n_cases"] = summary.n_cases;
    j["max_discrepancy"] = summary.max_discrepancy;
    j["failures"] = summary.failures;
    write_file(opts.out_dir, basename + ".json", j.dump(2) + "\n");
    std::cout << summary.suite << ": " << (summary.passed() ? "pass" : "fail")
              << " (max discrepancy " << format_double(summary.max_discrepancy) << ", "
              << summary.failures << " failures)\n";
    return summary.passed() ? 0 : 2;
}

int cmd_oracle(const nlohmann::json& config, const Options& opts) {
    Vector solution;
    double cell = 0.0;
    std::string basename = "oracle";
    try {
        const Matrix m = matrix_from_json(config.at("matrix"));
        const Vector shift = config.contains("shift") ? vector_from_json(config.at("shift"))
                                                      : Vector::zeros(m.rows());
        const ConvexSet c = set_from_json(config.at("set"));
        const int resolution = config.value("resolution", 201);
        if (config.contains("output")) {
            basename = config.at("output").value("basename", basename);
        }
        Mapping a;
        a.dim = m.rows();
        a.f = [m, shift](const Vector& x) { return m.apply(x) + shift; };
        a.tag = tag_monotone_lipschitz(spectral_norm(m));
        solution = vi_grid_oracle(c, a, resolution);
        cell = grid_cell_size(c, resolution);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    nlohmann::json j;
    j["solution"] = vector_to_json(solution);
    j["cell"] = cell;
    write_file(opts.out_dir, basename + ".json", j.dump(2) + "\n");
    std::cout << "solution: " << vector_to_json(solution).dump() << " (cell "
              << format_double(cell) << ")\n";
    return 0;
}

}  // namespace tproj::cli
