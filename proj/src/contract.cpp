#include <drc/contract.hpp>
#include <drc/error.hpp>

#include <cmath>
#include <string>

namespace drc {

AspTypeProfile::AspTypeProfile(std::vector<double> thetas, std::vector<double> alphas)
    : thetas_(std::move(thetas))
    , alphas_(std::move(alphas))
{
    if (thetas_.empty()) {
        throw Error(ErrorKind::ValidationError, "type profile needs at least one type");
    }
    if (thetas_.size() != alphas_.size()) {
        throw Error(ErrorKind::SizeMismatch, "thetas and alphas differ in length");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < thetas_.size(); ++i) {
        if (!std::isfinite(thetas_[i]) || thetas_[i] <= 0.0) {
            throw Error(ErrorKind::ValidationError, "theta must be positive and finite", i);
        }
        if (i > 0 && thetas_[i] < thetas_[i - 1]) {
            throw Error(ErrorKind::ValidationError, "thetas must be nondecreasing", i);
        }
        if (!std::isfinite(alphas_[i]) || alphas_[i] < 0.0) {
            throw Error(ErrorKind::ValidationError, "alpha must be a nonnegative probability", i);
        }
        total += alphas_[i];
    }
    if (std::abs(total - 1.0) > kBindingTol) {
        throw Error(ErrorKind::ValidationError, "alphas must sum to 1 (got " + std::to_string(total) + ")");
    }
}

void UtilityParams::validate() const
{
    if (!(gamma1 > 0.0) || !std::isfinite(gamma1)) {
        throw Error(ErrorKind::ValidationError, "gamma1 must be > 0");
    }
    if (!(gamma2 > 0.0) || !std::isfinite(gamma2)) {
        throw Error(ErrorKind::ValidationError, "gamma2 must be > 0");
    }
    if (!(gamma3 >= 0.0) || !std::isfinite(gamma3)) {
        throw Error(ErrorKind::ValidationError, "gamma3 must be >= 0");
    }
}

double asp_utility(double theta, Bundle bundle, const UtilityParams& params)
{
    return theta * bundle.reward - params.gamma1 * bundle.latency;
}

double teleop_utility(double xi, Bundle bundle, const UtilityParams& params)
{
    const double arg = params.gamma2 * xi + params.gamma3 * bundle.latency;
    if (!(arg > 0.0)) {
        throw Error(ErrorKind::NonPositiveLogArgument,
                    "gamma2*xi + gamma3*L = " + std::to_string(arg) + " at xi = " + std::to_string(xi));
    }
    return std::log(arg) - bundle.reward;
}

bool is_nondecreasing(std::span<const double> values, double tol) noexcept
{
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[i - 1] - tol) return false;
    }
    return true;
}

void require_nondecreasing(std::span<const double> values, double tol)
{
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[i - 1] - tol) {
            throw Error(ErrorKind::NonMonotoneLatencies,
                        "L[" + std::to_string(i) + "] < L[" + std::to_string(i - 1) + "]", i);
        }
    }
}

std::vector<double> rewards_from_latencies(std::span<const double> latencies,
                                           const AspTypeProfile& profile, double gamma1)
{
    if (latencies.size() != profile.size()) {
        throw Error(ErrorKind::SizeMismatch, "latency vector length differs from the number of types");
    }
    require_nondecreasing(latencies);
    const auto thetas = profile.thetas();
    std::vector<double> rewards(latencies.size());
    double marginal = latencies[0] / thetas[0];
    rewards[0] = gamma1 * marginal;
    for (std::size_t i = 1; i < latencies.size(); ++i) {
        marginal += (latencies[i] - latencies[i - 1]) / thetas[i];
        rewards[i] = gamma1 * marginal;
    }
    return rewards;
}

ContractMenu make_menu(std::vector<double> latencies, const AspTypeProfile& profile, double gamma1)
{
    auto rewards = rewards_from_latencies(latencies, profile, gamma1);
    return {std::move(latencies), std::move(rewards)};
}

FeasibilityReport check_feasibility(const ContractMenu& menu, const AspTypeProfile& profile,
                                    double gamma1, double tol)
{
    if (menu.latencies.size() != profile.size() || menu.rewards.size() != profile.size()) {
        throw Error(ErrorKind::SizeMismatch, "menu and profile differ in length");
    }
    const UtilityParams params{gamma1, 1.0, 1.0};
    const auto thetas = profile.thetas();
    const std::size_t n = profile.size();

    FeasibilityReport report;
    report.latencies_monotone = is_nondecreasing(menu.latencies, tol);
    report.rewards_monotone = is_nondecreasing(menu.rewards, tol);
    for (std::size_t i = 0; i < n; ++i) {
        const double own = asp_utility(thetas[i], menu.bundle(i), params);
        ++report.ir_checks;
        if (own < -tol) report.ir_violations.push_back({i, own});
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            ++report.ic_checks;
            const double other = asp_utility(thetas[i], menu.bundle(j), params);
            if (own < other - tol) report.ic_violations.push_back({i, j, own, other});
        }
    }
    return report;
}

double expected_teleop_utility(const ContractMenu& menu, const AspTypeProfile& profile, double xi,
                               const UtilityParams& params)
{
    if (menu.size() != profile.size()) {
        throw Error(ErrorKind::SizeMismatch, "menu and profile differ in length");
    }
    const auto alphas = profile.alphas();
    double total = 0.0;
    for (std::size_t i = 0; i < menu.size(); ++i) {
        total += alphas[i] * teleop_utility(xi, menu.bundle(i), params);
    }
    return total;
}

} // namespace drc
