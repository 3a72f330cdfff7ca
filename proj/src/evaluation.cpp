#include <drc/error.hpp>
#include <drc/evaluation.hpp>
#include <drc/random.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace drc {

TrainEvalSplit generate_quality_samples(const SyntheticQualityConfig& cfg, std::uint64_t seed)
{
    if (cfg.n_train == 0) throw Error(ErrorKind::ValidationError, "n_train must be >= 1");
    Rng rng(derive_seed(seed, "data-gen"));
    auto draw = truncated_normal(cfg.n_train + cfg.n_eval, cfg.mean, cfg.sd, cfg.lo, cfg.hi, rng);
    const std::string tag = "synthetic:seed=" + std::to_string(seed);
    TrainEvalSplit split;
    split.train = {std::vector<double>(draw.begin(), draw.begin() + static_cast<long>(cfg.n_train)), tag + ":train"};
    split.eval = {std::vector<double>(draw.begin() + static_cast<long>(cfg.n_train), draw.end()), tag + ":eval"};
    return split;
}

double eval_teleop_utility(const ContractMenu& menu, const QualitySampleSet& eval_samples,
                           const AspTypeProfile& profile, const UtilityParams& params)
{
    if (eval_samples.size() == 0) throw Error(ErrorKind::EmptySampleSet, "no evaluation samples");
    const auto count = static_cast<double>(eval_samples.size());
    double total = 0.0;
    for (std::size_t n = 0; n < eval_samples.size(); ++n) {
        try {
            total += expected_teleop_utility(menu, profile, eval_samples.values[n], params) / count;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NonPositiveLogArgument) throw;
            throw Error(ErrorKind::NonPositiveLogArgument,
                        "evaluation sample " + std::to_string(n) + " (xi = " +
                            std::to_string(eval_samples.values[n]) + ") gives a non-positive log argument",
                        n);
        }
    }
    return total;
}

std::vector<double> eval_asp_utilities(const ContractMenu& menu, const AspTypeProfile& profile, double gamma1)
{
    if (menu.size() != profile.size()) throw Error(ErrorKind::SizeMismatch, "menu and profile differ in length");
    const UtilityParams params{gamma1, 1.0, 1.0};
    std::vector<double> out(menu.size());
    for (std::size_t i = 0; i < menu.size(); ++i) {
        out[i] = asp_utility(profile.thetas()[i], menu.bundle(i), params);
    }
    return out;
}

namespace {

std::size_t grid_points(double max, double step)
{
    return static_cast<std::size_t>(std::floor(max / step + 1e-9)) + 1;
}

double monotone_tuples(std::size_t n_types, std::size_t m)
{
    // multiset coefficient C(m + I - 1, I)
    double count = 1.0;
    for (std::size_t k = 0; k < n_types; ++k) {
        count *= static_cast<double>(m + k) / static_cast<double>(k + 1);
    }
    return count;
}

std::size_t ternary_budget(std::size_t k)
{
    std::size_t evals = 0;
    std::size_t width = k;
    while (width > 4) {
        evals += 2;
        width -= (width - 1) / 3;
    }
    return evals + width;
}

void check_grid(std::size_t n_types, const OracleGrid& grid)
{
    if (n_types < 1 || n_types > 3) throw Error(ErrorKind::InvalidArgument, "oracle search supports 1 <= I <= 3");
    if (!(grid.latency_step > 0.0) || !(grid.lambda_step > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "grid steps must be > 0");
    }
    if (!(grid.latency_max >= 0.0) || !(grid.lambda_max >= 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "grid bounds must be >= 0");
    }
}

struct Incumbent {
    double objective = -std::numeric_limits<double>::infinity();
    std::vector<double> latencies;
    double lambda = 0.0;
    std::size_t evaluations = 0;
};

void search_lambda(const DroProblem& problem, const OracleGrid& grid, std::size_t k,
                   const std::vector<double>& latencies, Incumbent& best)
{
    const auto value = [&](std::size_t j) {
        ++best.evaluations;
        const double lambda = static_cast<double>(j) * grid.lambda_step;
        return objective_serial(problem, latencies, lambda).omega;
    };
    const auto offer = [&](std::size_t j, double omega) {
        if (omega > best.objective) {
            best.objective = omega;
            best.latencies = latencies;
            best.lambda = static_cast<double>(j) * grid.lambda_step;
        }
    };

    std::size_t a = 0;
    std::size_t b = k - 1;
    if (!grid.exhaustive_lambda) {
        while (b - a + 1 > 4) {
            const std::size_t third = (b - a) / 3;
            const std::size_t m1 = a + third;
            const std::size_t m2 = b - third;
            const double v1 = value(m1);
            const double v2 = value(m2);
            offer(m1, v1);
            offer(m2, v2);
            if (v1 < v2) {
                a = m1 + 1;
            } else {
                b = m2;
            }
        }
    }
    for (std::size_t j = a; j <= b; ++j) offer(j, value(j));
}

} // namespace

double projected_oracle_evaluations(std::size_t n_types, const OracleGrid& grid)
{
    check_grid(n_types, grid);
    const std::size_t m = grid_points(grid.latency_max, grid.latency_step);
    const std::size_t k = grid_points(grid.lambda_max, grid.lambda_step);
    const double per_tuple = grid.exhaustive_lambda ? static_cast<double>(k) : static_cast<double>(ternary_budget(k));
    return monotone_tuples(n_types, m) * per_tuple;
}

OracleResult oracle_menu_search(const DroProblem& problem, const OracleGrid& grid)
{
    problem.validate();
    const std::size_t n_types = problem.profile.size();
    const double projected = projected_oracle_evaluations(n_types, grid);
    if (projected > kOracleEvaluationLimit) {
        throw Error(ErrorKind::GridTooLarge,
                    "oracle grid needs " + std::to_string(projected) + " objective evaluations");
    }
    const std::size_t m = grid_points(grid.latency_max, grid.latency_step);
    const std::size_t k = grid_points(grid.lambda_max, grid.lambda_step);
    const auto latency_at = [&](std::size_t idx) { return static_cast<double>(idx) * grid.latency_step; };

    // One incumbent per first-coordinate index; reduced in index order afterwards.
    std::vector<Incumbent> per_first(m);
    const auto count = static_cast<long>(m);
#pragma omp parallel for schedule(dynamic, 1)
    for (long first = 0; first < count; ++first) {
        auto& best = per_first[static_cast<std::size_t>(first)];
        std::vector<double> latencies(n_types, latency_at(static_cast<std::size_t>(first)));
        const auto f = static_cast<std::size_t>(first);
        if (n_types == 1) {
            search_lambda(problem, grid, k, latencies, best);
        } else if (n_types == 2) {
            for (std::size_t second = f; second < m; ++second) {
                latencies[1] = latency_at(second);
                search_lambda(problem, grid, k, latencies, best);
            }
        } else {
            for (std::size_t second = f; second < m; ++second) {
                latencies[1] = latency_at(second);
                for (std::size_t third = second; third < m; ++third) {
                    latencies[2] = latency_at(third);
                    search_lambda(problem, grid, k, latencies, best);
                }
            }
        }
    }

    OracleResult result;
    result.best_objective = -std::numeric_limits<double>::infinity();
    for (const auto& inc : per_first) {
        result.evaluations += inc.evaluations;
        if (inc.objective > result.best_objective) {
            result.best_objective = inc.objective;
            result.best_latencies = inc.latencies;
            result.best_lambda = inc.lambda;
        }
    }
    return result;
}

void EvaluationScenario::validate() const
{
    for (std::size_t i = 0; i < shift_magnitudes.size(); ++i) {
        if (!(shift_magnitudes[i] >= 0.0)) throw Error(ErrorKind::ValidationError, "shift magnitudes must be >= 0");
        if (i > 0 && shift_magnitudes[i] < shift_magnitudes[i - 1]) {
            throw Error(ErrorKind::ValidationError, "shift magnitudes must be sorted ascending");
        }
    }
}

double MetricsTable::teleop_utility(Method method, std::size_t extreme_count, double shift) const
{
    for (const auto& row : teleop) {
        if (row.method == method && row.extreme_count == extreme_count && row.shift == shift) {
            return row.mean_teleop_utility;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "no metric row for the requested cell");
}

SolveReport train_method(Method method, const QualitySampleSet& train, const BenchmarkSetup& setup)
{
    switch (method) {
    case Method::Dro: {
        DroProblem problem{train, setup.profile, setup.params,
                           AmbiguityConfig::derived(setup.support, setup.tau, train.size()), setup.inner};
        return solve(problem, setup.bcd);
    }
    case Method::StochasticProgramming:
        return solve_sp(train, setup.profile, setup.params, setup.bcd);
    case Method::RobustOptimization:
        return solve_ro(setup.support, setup.profile, setup.params, setup.bcd);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown method");
}

MetricsTable run_benchmark(const EvaluationScenario& scenario, const std::vector<Method>& methods,
                           const QualitySampleSet& train, const QualitySampleSet& eval,
                           const BenchmarkSetup& setup)
{
    scenario.validate();
    MetricsTable table;
    const std::uint64_t placement_seed = derive_seed(scenario.seed, kExtremePointsLabel);
    for (std::size_t extreme_count : scenario.extreme_counts) {
        const auto contaminated = inject_extreme_points(train, extreme_count, scenario.extreme_value, placement_seed);
        for (Method method : methods) {
            auto report = train_method(method, contaminated, setup);
            for (double shift : scenario.shift_magnitudes) {
                const double u = eval_teleop_utility(report.menu, shift_samples(eval, shift), setup.profile,
                                                     setup.params);
                table.teleop.push_back({method, extreme_count, shift, u});
            }
            const auto asp = eval_asp_utilities(report.menu, setup.profile, setup.params.gamma1);
            for (std::size_t i = 0; i < asp.size(); ++i) {
                table.asp.push_back({method, extreme_count, i + 1, asp[i]});
            }
            table.menus.push_back({method, extreme_count, std::move(report)});
        }
    }
    return table;
}

} // namespace drc
