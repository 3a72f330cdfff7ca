#pragma once

#include <drc/ambiguity.hpp>
#include <drc/contract.hpp>

#include <optional>
#include <span>

namespace drc {

struct InnerSolverConfig {
    double bisect_tol = 1e-8;
    int max_bisect_iters = 64;

    /// Checks tol > 0, B >= 1 and that B iterations can shrink an interval of width D below tol.
    void validate(double diameter) const;
};

enum class CandidateTag { Lower, Upper, Anchor, Stationary };

const char* to_string(CandidateTag tag) noexcept;

struct InnerSolution {
    double xi_star = 0.0;
    double f_value = 0.0;
    CandidateTag tag = CandidateTag::Lower;
};

/// sum_i alpha_i ln(gamma2 xi + gamma3 L_i) + lambda |xi - anchor|
double f_n(double xi, std::span<const double> latencies, double lambda, double anchor,
           const UtilityParams& params, std::span<const double> alphas);

/// sum_i alpha_i R_i for the rewards implied by the latencies, in O(I).
double g_of_L(std::span<const double> latencies, std::span<const double> alphas,
              std::span<const double> thetas, double gamma1);

/*
 * Root of sum_i alpha_i gamma2 / (gamma2 xi + gamma3 L_i) = lambda strictly inside
 * (lo_open, hi_open), by bisection. The left side is strictly decreasing in xi, so
 * the root is unique when it exists; nullopt otherwise.
 */
std::optional<double> solve_xi_p(std::span<const double> latencies, double lambda, double lo_open,
                                 double hi_open, const UtilityParams& params,
                                 std::span<const double> alphas, const InnerSolverConfig& cfg);

/*
 * min over xi in [lo, hi] of f_n. The minimizer is one of {lo, hi, anchor, stationary root
 * on (lo, anchor)}; the last two are only tried when the anchor lies in the support.
 * Ties go to the smallest xi.
 */
InnerSolution solve_inner(std::span<const double> latencies, double lambda, double anchor,
                          const SupportInterval& support, const UtilityParams& params,
                          std::span<const double> alphas, const InnerSolverConfig& cfg);

/// s_n = phi_n(L, lambda) - g(L)
double s_value(const InnerSolution& inner, std::span<const double> latencies,
               std::span<const double> alphas, std::span<const double> thetas, double gamma1);

} // namespace drc
