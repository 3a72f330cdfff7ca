#pragma once

#include <drc/ambiguity.hpp>
#include <drc/baselines.hpp>
#include <drc/bcd.hpp>
#include <drc/contract.hpp>
#include <drc/evaluation.hpp>
#include <drc/inner_solver.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace drc {

/*
 * Flat run configuration. Every field has a default; the defaults are the
 * reference experiment (8 types, 200 training samples on [60, 100], tau 0.99).
 */
struct RunConfig {
    // contract model
    std::vector<double> thetas{110, 140, 175, 200, 220, 235, 245, 250};
    std::optional<std::vector<double>> alphas; // drawn from Dirichlet(1) when absent
    UtilityParams params{};

    // ambiguity set and data
    double tau = 0.99;
    double support_lo = 60.0;
    double support_hi = 100.0;
    std::size_t n_samples = 200;
    std::size_t n_eval = 50;
    double quality_mean = 85.0;
    double quality_sd = 8.0;

    // solvers
    BcdConfig bcd{};
    InnerSolverConfig inner{};
    Method method = Method::Dro;
    int threads = 0; // 0 keeps the OpenMP default

    // evaluation scenario
    std::vector<double> shift_magnitudes{0, 10, 20, 30, 40, 50, 60};
    std::vector<std::size_t> extreme_counts{0, 50, 100};
    std::size_t extreme_count = 0; // contamination for solve/trace/evaluate
    double extreme_value = 1.0;

    // oracle
    OracleGrid oracle{};
    double oracle_tolerance = 1e-2;

    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> train_path;
    std::optional<std::filesystem::path> eval_path;
    std::optional<std::filesystem::path> profile_path;
    std::optional<std::filesystem::path> menu_path;
    std::filesystem::path out_dir = "out";

    void validate() const;

    AspTypeProfile profile() const;
    SupportInterval support() const { return {support_lo, support_hi}; }
    SyntheticQualityConfig synthetic() const;
    EvaluationScenario scenario() const;
    BenchmarkSetup benchmark_setup() const;
};

/// Parse `key = value` text (# starts a comment). Unknown keys and bad values are ParseErrors.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Symmetric Dirichlet(1) draw, deterministic per seed.
std::vector<double> generate_alphas(std::size_t n_types, std::uint64_t seed);

} // namespace drc
