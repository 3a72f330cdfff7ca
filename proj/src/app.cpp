#include <drc/app.hpp>
#include <drc/csv.hpp>
#include <drc/error.hpp>
#include <drc/random.hpp>

#include <array>
#include <cmath>
#include <exception>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drc {

namespace {

constexpr std::array<std::string_view, 6> kSubcommands{"gen-data", "solve", "evaluate", "bench", "oracle", "trace"};

QualitySampleSet training_data(const RunConfig& cfg)
{
    if (cfg.train_path) return csv::read_samples(*cfg.train_path);
    return generate_quality_samples(cfg.synthetic(), cfg.seed).train;
}

QualitySampleSet evaluation_data(const RunConfig& cfg)
{
    if (cfg.eval_path) return csv::read_samples(*cfg.eval_path);
    return generate_quality_samples(cfg.synthetic(), cfg.seed).eval;
}

QualitySampleSet contaminated_training_data(const RunConfig& cfg)
{
    return inject_extreme_points(training_data(cfg), cfg.extreme_count, cfg.extreme_value,
                                 derive_seed(cfg.seed, kExtremePointsLabel));
}

void print_report(std::ostream& out, Method method, const SolveReport& report, const AspTypeProfile& profile,
                  double gamma1)
{
    const auto feas = check_feasibility(report.menu, profile, gamma1);
    out << "method=" << to_string(method) << " converged=" << (report.converged ? "true" : "false")
        << " iterations=" << report.iterations_used
        << " objective=" << csv::format_double(report.objective_trace.back())
        << " lambda=" << csv::format_double(report.final_lambda)
        << " feasible=" << (feas.feasible() ? "true" : "false") << '\n';
}

int run_gen_data(const RunConfig& cfg, std::ostream& out)
{
    const auto split = generate_quality_samples(cfg.synthetic(), cfg.seed);
    csv::write_samples(cfg.out_dir / "train.csv", split.train);
    csv::write_samples(cfg.out_dir / "eval.csv", split.eval);
    csv::write_profile(cfg.out_dir / "profile.csv", cfg.profile());
    out << "wrote " << split.train.size() << " training and " << split.eval.size() << " evaluation samples to "
        << cfg.out_dir.string() << '\n';
    return kExitOk;
}

int run_solve(const RunConfig& cfg, std::ostream& out, bool trace_only)
{
    auto setup = cfg.benchmark_setup();
    const auto report = train_method(cfg.method, contaminated_training_data(cfg), setup);
    const std::optional<std::string_view> method_column =
        cfg.method == Method::Dro ? std::nullopt : std::optional<std::string_view>(to_string(cfg.method));
    csv::write_trace(cfg.out_dir / "trace.csv", report, method_column);
    if (!trace_only) {
        csv::write_menu(cfg.out_dir / "menu.csv", report.menu);
        csv::write_profile(cfg.out_dir / "profile.csv", setup.profile);
    }
    print_report(out, cfg.method, report, setup.profile, setup.params.gamma1);
    return kExitOk;
}

int run_evaluate(const RunConfig& cfg, std::ostream& out)
{
    const auto menu = csv::read_menu(cfg.menu_path ? *cfg.menu_path : cfg.out_dir / "menu.csv");
    const auto profile = cfg.profile();
    if (menu.size() != profile.size()) {
        throw Error(ErrorKind::SizeMismatch, "menu has " + std::to_string(menu.size()) + " rows but the profile has " +
                                                 std::to_string(profile.size()) + " types");
    }
    const auto eval = evaluation_data(cfg);

    MetricsTable table;
    for (double shift : cfg.shift_magnitudes) {
        const double u = eval_teleop_utility(menu, shift_samples(eval, shift), profile, cfg.params);
        table.teleop.push_back({cfg.method, cfg.extreme_count, shift, u});
        out << "shift=" << csv::format_double(shift) << " mean_teleop_utility=" << csv::format_double(u) << '\n';
    }
    const auto asp = eval_asp_utilities(menu, profile, cfg.params.gamma1);
    for (std::size_t i = 0; i < asp.size(); ++i) table.asp.push_back({cfg.method, cfg.extreme_count, i + 1, asp[i]});
    csv::write_metrics(cfg.out_dir / "evaluation.csv", table);
    csv::write_asp_utilities(cfg.out_dir / "evaluation_asp.csv", table);
    return kExitOk;
}

int run_bench(const RunConfig& cfg, std::ostream& out)
{
    const std::vector<Method> methods{Method::Dro, Method::StochasticProgramming, Method::RobustOptimization};
    const auto table = run_benchmark(cfg.scenario(), methods, training_data(cfg), evaluation_data(cfg),
                                     cfg.benchmark_setup());
    csv::write_metrics(cfg.out_dir / "metrics.csv", table);
    csv::write_asp_utilities(cfg.out_dir / "asp_utility.csv", table);
    for (const auto& trained : table.menus) {
        out << "extreme_count=" << trained.extreme_count << ' ';
        print_report(out, trained.method, trained.report, cfg.profile(), cfg.params.gamma1);
    }
    out << "wrote " << table.teleop.size() << " metric rows to " << (cfg.out_dir / "metrics.csv").string() << '\n';
    return kExitOk;
}

int run_oracle(const RunConfig& cfg, std::ostream& out)
{
    const auto train = contaminated_training_data(cfg);
    DroProblem problem{train, cfg.profile(), cfg.params,
                       AmbiguityConfig::derived(cfg.support(), cfg.tau, train.size()), cfg.inner};
    const auto report = solve(problem, cfg.bcd);
    const auto oracle = oracle_menu_search(problem, cfg.oracle);
    const double bcd_objective = report.objective_trace.back();
    const double gap = std::abs(bcd_objective - oracle.best_objective);
    const bool ok = gap <= cfg.oracle_tolerance;

    const auto file = cfg.out_dir / "oracle.csv";
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream csv_out(file, std::ios::binary);
    if (!csv_out) throw Error(ErrorKind::IoError, "cannot open '" + file.string() + "' for writing");
    csv_out << "bcd_objective,oracle_objective,gap,tolerance,oracle_lambda";
    for (std::size_t i = 0; i < oracle.best_latencies.size(); ++i) csv_out << ",oracle_L_" << i + 1;
    csv_out << '\n'
            << csv::format_double(bcd_objective) << ',' << csv::format_double(oracle.best_objective) << ','
            << csv::format_double(gap) << ',' << csv::format_double(cfg.oracle_tolerance) << ','
            << csv::format_double(oracle.best_lambda);
    for (double l : oracle.best_latencies) csv_out << ',' << csv::format_double(l);
    csv_out << '\n';

    out << "bcd_objective=" << csv::format_double(bcd_objective)
        << " oracle_objective=" << csv::format_double(oracle.best_objective) << " gap=" << csv::format_double(gap)
        << " tolerance=" << csv::format_double(cfg.oracle_tolerance) << (ok ? " PASS" : " FAIL") << '\n';
    return ok ? kExitOk : kExitNumericFailure;
}

int exit_status_for(ErrorKind kind)
{
    switch (category_of(kind)) {
    case ErrorCategory::Config: return kExitConfigError;
    case ErrorCategory::Data: return kExitDataError;
    case ErrorCategory::Numeric: return kExitNumericFailure;
    }
    return kExitNumericFailure;
}

} // namespace

bool is_subcommand(std::string_view name) noexcept
{
    for (auto s : kSubcommands) {
        if (s == name) return true;
    }
    return false;
}

int dispatch(std::string_view subcommand, const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
#ifdef _OPENMP
        if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
        cfg.validate();
        if (subcommand == "gen-data") return run_gen_data(cfg, out);
        if (subcommand == "solve") return run_solve(cfg, out, false);
        if (subcommand == "trace") return run_solve(cfg, out, true);
        if (subcommand == "evaluate") return run_evaluate(cfg, out);
        if (subcommand == "bench") return run_bench(cfg, out);
        if (subcommand == "oracle") return run_oracle(cfg, out);
        err << "error: unknown subcommand '" << subcommand << "'\n";
        return kExitConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_status_for(e.kind());
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumericFailure;
    }
}

} // namespace drc
