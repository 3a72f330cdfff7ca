#pragma once

#include <drc/ambiguity.hpp>
#include <drc/bcd.hpp>
#include <drc/contract.hpp>

#include <span>
#include <string_view>

namespace drc {

enum class Method { Dro, StochasticProgramming, RobustOptimization };

/// "dro", "sp", "ro"
std::string_view to_string(Method method) noexcept;
Method parse_method(std::string_view text);

/// (1/K) sum_k sum_i alpha_i (ln(gamma2 xi_k + gamma3 L_i) - R_i) with R from the latencies.
double scenario_objective(std::span<const double> points, std::span<const double> latencies,
                          const AspTypeProfile& profile, const UtilityParams& params);

/*
 * Sample-average contract: ascent on the mean utility over the training samples,
 * using the same ironed fixed-step engine as the DRO solver.
 */
SolveReport solve_sp(const QualitySampleSet& samples, const AspTypeProfile& profile,
                     const UtilityParams& params, const BcdConfig& cfg);

/// Worst-case contract: the utility is increasing in xi, so the worst case sits at the support's lower end.
SolveReport solve_ro(const SupportInterval& support, const AspTypeProfile& profile,
                     const UtilityParams& params, const BcdConfig& cfg);

} // namespace drc
