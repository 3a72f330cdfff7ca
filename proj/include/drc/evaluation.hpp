#pragma once

#include <drc/ambiguity.hpp>
#include <drc/baselines.hpp>
#include <drc/bcd.hpp>
#include <drc/contract.hpp>
#include <drc/objective.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace drc {

/// Synthetic stand-in for measured quality scores: a normal truncated to the support.
struct SyntheticQualityConfig {
    double mean = 85.0;
    double sd = 8.0;
    double lo = 60.0;
    double hi = 100.0;
    std::size_t n_train = 200;
    std::size_t n_eval = 50;
};

struct TrainEvalSplit {
    QualitySampleSet train;
    QualitySampleSet eval;
};

/// One draw of n_train + n_eval scores; the first n_train are training data.
TrainEvalSplit generate_quality_samples(const SyntheticQualityConfig& cfg, std::uint64_t seed);

/// (1/N) sum_n sum_i alpha_i pi_T^i(xi_n). A non-positive log argument reports the sample index.
double eval_teleop_utility(const ContractMenu& menu, const QualitySampleSet& eval_samples,
                           const AspTypeProfile& profile, const UtilityParams& params);

/// pi_A^i(L_i, R_i) for every type.
std::vector<double> eval_asp_utilities(const ContractMenu& menu, const AspTypeProfile& profile, double gamma1);

struct OracleGrid {
    double latency_max = 50.0;
    double latency_step = 0.05;
    double lambda_max = 10.0;
    double lambda_step = 0.05;
    /// Scan every lambda point. Otherwise search the lambda grid by ternary search,
    /// which is exact on the grid because Omega is concave in lambda.
    bool exhaustive_lambda = false;
};

struct OracleResult {
    double best_objective = 0.0;
    std::vector<double> best_latencies;
    double best_lambda = 0.0;
    std::size_t evaluations = 0;
};

inline constexpr double kOracleEvaluationLimit = 1e8;

/// Number of objective evaluations a search over `grid` would make for I types.
double projected_oracle_evaluations(std::size_t n_types, const OracleGrid& grid);

/*
 * Brute-force maximum of Omega(L, lambda) over nondecreasing latency grids and a
 * lambda grid. I <= 3. Throws GridTooLarge past kOracleEvaluationLimit evaluations.
 */
OracleResult oracle_menu_search(const DroProblem& problem, const OracleGrid& grid);

struct EvaluationScenario {
    std::vector<double> shift_magnitudes{0, 10, 20, 30, 40, 50, 60};
    std::vector<std::size_t> extreme_counts{0, 50, 100};
    double extreme_value = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct BenchmarkSetup {
    AspTypeProfile profile;
    UtilityParams params;
    SupportInterval support{60.0, 100.0};
    double tau = 0.99;
    BcdConfig bcd;
    InnerSolverConfig inner;
};

struct TeleopMetric {
    Method method;
    std::size_t extreme_count;
    double shift;
    double mean_teleop_utility;
};

struct AspMetric {
    Method method;
    std::size_t extreme_count;
    std::size_t type_index; // 1-based
    double asp_utility;
};

struct TrainedMenu {
    Method method;
    std::size_t extreme_count;
    SolveReport report;
};

struct MetricsTable {
    std::vector<TeleopMetric> teleop;
    std::vector<AspMetric> asp;
    std::vector<TrainedMenu> menus;

    double teleop_utility(Method method, std::size_t extreme_count, double shift) const;
};

/// Seed label used to place extreme points in the training data.
inline constexpr const char* kExtremePointsLabel = "extreme-points";

/// Train one method on the given (possibly contaminated) data.
SolveReport train_method(Method method, const QualitySampleSet& train, const BenchmarkSetup& setup);

/*
 * For each contamination level: contaminate the training data, train every
 * requested method, and score its menu on the eval data at every shift.
 * Extreme points touch training data only.
 */
MetricsTable run_benchmark(const EvaluationScenario& scenario, const std::vector<Method>& methods,
                           const QualitySampleSet& train, const QualitySampleSet& eval,
                           const BenchmarkSetup& setup);

} // namespace drc
