#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace drc {

/// Exact-binding tolerance for IR/IC equalities and monotonicity inputs.
inline constexpr double kBindingTol = 1e-12;
/// Default tolerance for IR/IC inequality checks.
inline constexpr double kFeasibilityTol = 1e-9;

/*
 * Type ladder of the service providers: willingness values theta (positive,
 * nondecreasing) and the prior probability alpha of each type.
 */
class AspTypeProfile {
public:
    AspTypeProfile(std::vector<double> thetas, std::vector<double> alphas);

    std::size_t size() const noexcept { return thetas_.size(); }
    std::span<const double> thetas() const noexcept { return thetas_; }
    std::span<const double> alphas() const noexcept { return alphas_; }

private:
    std::vector<double> thetas_;
    std::vector<double> alphas_;
};

struct UtilityParams {
    double gamma1 = 1.0; // latency -> resource cost
    double gamma2 = 1.0; // quality weight
    double gamma3 = 1.0; // latency weight

    void validate() const;
};

struct Bundle {
    double latency = 0.0; // inverse latency L (1/s)
    double reward = 0.0;
};

struct ContractMenu {
    std::vector<double> latencies;
    std::vector<double> rewards;

    std::size_t size() const noexcept { return latencies.size(); }
    Bundle bundle(std::size_t i) const { return {latencies.at(i), rewards.at(i)}; }
};

/// theta * R - gamma1 * L.
double asp_utility(double theta, Bundle bundle, const UtilityParams& params);

/// ln(gamma2 * xi + gamma3 * L) - R. Throws NonPositiveLogArgument when the log argument is <= 0.
double teleop_utility(double xi, Bundle bundle, const UtilityParams& params);

/*
 * Rewards that make type-1 IR and every local downward IC bind:
 *   R_i = gamma1 * (L_1/theta_1 + sum_{j=2..i} (L_j - L_{j-1}) / theta_j).
 * Requires a nondecreasing latency vector (within kBindingTol).
 */
std::vector<double> rewards_from_latencies(std::span<const double> latencies,
                                           const AspTypeProfile& profile, double gamma1);

/// Menu with rewards derived from the latencies.
ContractMenu make_menu(std::vector<double> latencies, const AspTypeProfile& profile, double gamma1);

void require_nondecreasing(std::span<const double> values, double tol = kBindingTol);
bool is_nondecreasing(std::span<const double> values, double tol = 0.0) noexcept;

struct IrViolation {
    std::size_t type;
    double utility;
};

struct IcViolation {
    std::size_t type;      // the type whose incentive is violated
    std::size_t preferred; // the bundle it would rather take
    double own_utility;
    double deviation_utility;
};

struct FeasibilityReport {
    std::vector<IrViolation> ir_violations;
    std::vector<IcViolation> ic_violations;
    bool latencies_monotone = true;
    bool rewards_monotone = true;
    std::size_t ir_checks = 0;
    std::size_t ic_checks = 0;

    bool incentive_feasible() const noexcept { return ir_violations.empty() && ic_violations.empty(); }
    bool feasible() const noexcept { return incentive_feasible() && latencies_monotone && rewards_monotone; }
};

FeasibilityReport check_feasibility(const ContractMenu& menu, const AspTypeProfile& profile,
                                    double gamma1, double tol = kFeasibilityTol);

/// sum_i alpha_i * (ln(gamma2 xi + gamma3 L_i) - R_i) at a single quality value.
double expected_teleop_utility(const ContractMenu& menu, const AspTypeProfile& profile, double xi,
                               const UtilityParams& params);

} // namespace drc
