#pragma once

#include <drc/contract.hpp>
#include <drc/objective.hpp>

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace drc {

struct BcdConfig {
    int max_iters = 1500;
    double conv_tol = 1e-3;
    double eta_L = 1e4;
    double eta_lambda = 1e-3;
    std::vector<double> L_init; // empty means all zeros
    double lambda_init = 6.0;
    Execution execution = Execution::Parallel;

    void validate(std::size_t n_types) const;
    std::vector<double> initial_latencies(std::size_t n_types) const;
};

struct BcdState {
    std::vector<double> latencies;
    double lambda = 0.0;
    std::vector<double> xi_stars;
    std::vector<double> s_values;
    double objective = -std::numeric_limits<double>::infinity();
};

struct SolveReport {
    ContractMenu menu;
    bool converged = false;
    int iterations_used = 0;
    double initial_objective = 0.0;
    double final_lambda = 0.0;
    std::vector<double> objective_trace;             // one entry per iteration
    std::vector<double> lambda_trace;                // one entry per iteration
    std::vector<std::vector<double>> latency_trace;  // L after each iteration
};

/*
 * Approximate L-gradient with the inner minimizers held fixed:
 *   dL_i = (1/N) sum_n (alpha_i gamma3 / (gamma2 xi*_n + gamma3 L_i) - alpha_i gamma1 / theta_i)
 */
std::vector<double> grad_L(std::span<const double> xi_stars, std::span<const double> latencies,
                           const AspTypeProfile& profile, const UtilityParams& params);

/// -eps + (1/N) sum_n |xi*_n - anchor_n|
double grad_lambda(std::span<const double> xi_stars, std::span<const double> anchors, double epsilon);

/*
 * Weighted least-squares projection onto the nondecreasing cone (pool adjacent
 * violators). Blocks whose total weight is zero take their unweighted mean.
 */
std::vector<double> iron_monotone(std::span<const double> values, std::span<const double> weights);

/// L <- max(iron(L + eta * grad, alpha), 0)
std::vector<double> ascend_latencies(std::span<const double> latencies, std::span<const double> gradient,
                                     double eta, std::span<const double> alphas);

BcdState initial_state(const DroProblem& problem, const BcdConfig& cfg);

/// One pass over the s-, L- and lambda-blocks followed by a fresh objective evaluation.
BcdState bcd_step(const BcdState& state, const DroProblem& problem, const BcdConfig& cfg);

using StepFunction = std::function<BcdState(const BcdState&)>;

/*
 * Fixed-step ascent loop shared by every method: iterate `step` until
 * |Omega* - Omega_t| <= conv_tol or max_iters, then price the final L.
 */
SolveReport run_ascent(BcdState initial, const StepFunction& step, const BcdConfig& cfg,
                       const AspTypeProfile& profile, double gamma1);

SolveReport solve(const DroProblem& problem, const BcdConfig& cfg);

} // namespace drc
