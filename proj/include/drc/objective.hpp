#pragma once

#include <drc/ambiguity.hpp>
#include <drc/contract.hpp>
#include <drc/inner_solver.hpp>

#include <span>
#include <vector>

namespace drc {

/// Everything the DRO objective needs besides the iterate (L, lambda).
struct DroProblem {
    QualitySampleSet samples;
    AspTypeProfile profile;
    UtilityParams params;
    AmbiguityConfig ambiguity;
    InnerSolverConfig inner;

    void validate() const;
};

struct ObjectiveValue {
    double omega = 0.0;
    std::vector<double> xi_stars;
    std::vector<double> s_values;
};

enum class Execution { Serial, Parallel };

/*
 * Omega = -lambda * eps + (1/N) sum_n s_n with one inner solve per sample.
 *
 * The serial routine is the reference. The parallel routine fans the N inner
 * solves out over OpenMP threads, then reduces s_n in ascending n on one thread,
 * so both produce bitwise-identical results.
 */
ObjectiveValue objective_serial(const DroProblem& problem, std::span<const double> latencies, double lambda);
ObjectiveValue objective_parallel(const DroProblem& problem, std::span<const double> latencies, double lambda);

ObjectiveValue objective(const DroProblem& problem, std::span<const double> latencies, double lambda,
                         Execution exec = Execution::Parallel);

/// Worker threads available to objective_parallel (1 when built without OpenMP).
int parallel_threads() noexcept;

} // namespace drc
