#include <drc/error.hpp>
#include <drc/inner_solver.hpp>

#include <array>
#include <cmath>
#include <string>

namespace drc {

void InnerSolverConfig::validate(double diameter) const
{
    if (!(bisect_tol > 0.0)) throw Error(ErrorKind::ValidationError, "bisect_tol must be > 0");
    if (max_bisect_iters < 1) throw Error(ErrorKind::ValidationError, "max_bisect_iters must be >= 1");
    const double needed = std::ceil(std::log2(diameter / bisect_tol));
    if (static_cast<double>(max_bisect_iters) < needed) {
        throw Error(ErrorKind::ValidationError,
                    "max_bisect_iters must be >= ceil(log2(D / bisect_tol)) = " + std::to_string(needed));
    }
}

const char* to_string(CandidateTag tag) noexcept
{
    switch (tag) {
    case CandidateTag::Lower: return "lo";
    case CandidateTag::Upper: return "hi";
    case CandidateTag::Anchor: return "anchor";
    case CandidateTag::Stationary: return "stationary";
    }
    return "?";
}

double f_n(double xi, std::span<const double> latencies, double lambda, double anchor,
           const UtilityParams& params, std::span<const double> alphas)
{
    double total = 0.0;
    for (std::size_t i = 0; i < latencies.size(); ++i) {
        const double arg = params.gamma2 * xi + params.gamma3 * latencies[i];
        if (!(arg > 0.0)) {
            throw Error(ErrorKind::NonPositiveLogArgument,
                        "gamma2*xi + gamma3*L_i <= 0 at xi = " + std::to_string(xi), i);
        }
        total += alphas[i] * std::log(arg);
    }
    return total + lambda * std::abs(xi - anchor);
}

double g_of_L(std::span<const double> latencies, std::span<const double> alphas,
              std::span<const double> thetas, double gamma1)
{
    require_nondecreasing(latencies);
    double marginal = 0.0;
    double prev = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < latencies.size(); ++i) {
        marginal += (latencies[i] - prev) / thetas[i];
        prev = latencies[i];
        total += alphas[i] * marginal;
    }
    return gamma1 * total;
}

namespace {

double stationarity_lhs(double xi, std::span<const double> latencies, const UtilityParams& params,
                        std::span<const double> alphas)
{
    double total = 0.0;
    for (std::size_t i = 0; i < latencies.size(); ++i) {
        total += alphas[i] * params.gamma2 / (params.gamma2 * xi + params.gamma3 * latencies[i]);
    }
    return total;
}

} // namespace

std::optional<double> solve_xi_p(std::span<const double> latencies, double lambda, double lo_open,
                                 double hi_open, const UtilityParams& params,
                                 std::span<const double> alphas, const InnerSolverConfig& cfg)
{
    if (!(lambda > 0.0) || !(lo_open < hi_open)) return std::nullopt;
    // Strictly decreasing left side: a root inside (a, b) needs lhs(a) > lambda > lhs(b).
    if (!(stationarity_lhs(lo_open, latencies, params, alphas) > lambda)) return std::nullopt;
    if (!(stationarity_lhs(hi_open, latencies, params, alphas) < lambda)) return std::nullopt;

    double a = lo_open;
    double b = hi_open;
    for (int it = 0; it < cfg.max_bisect_iters && b - a > cfg.bisect_tol; ++it) {
        const double mid = 0.5 * (a + b);
        if (stationarity_lhs(mid, latencies, params, alphas) > lambda) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

InnerSolution solve_inner(std::span<const double> latencies, double lambda, double anchor,
                          const SupportInterval& support, const UtilityParams& params,
                          std::span<const double> alphas, const InnerSolverConfig& cfg)
{
    struct Candidate {
        double xi;
        CandidateTag tag;
    };
    std::array<Candidate, 4> candidates{};
    std::size_t count = 0;
    candidates[count++] = {support.lo(), CandidateTag::Lower};
    candidates[count++] = {support.hi(), CandidateTag::Upper};
    if (support.contains(anchor)) {
        candidates[count++] = {anchor, CandidateTag::Anchor};
        if (lambda > 0.0) {
            if (auto root = solve_xi_p(latencies, lambda, support.lo(), anchor, params, alphas, cfg)) {
                candidates[count++] = {*root, CandidateTag::Stationary};
            }
        }
    }

    InnerSolution best;
    bool have = false;
    for (std::size_t k = 0; k < count; ++k) {
        const auto& c = candidates[k];
        const double f = f_n(c.xi, latencies, lambda, anchor, params, alphas);
        if (!have || f < best.f_value || (f == best.f_value && c.xi < best.xi_star)) {
            best = {c.xi, f, c.tag};
            have = true;
        }
    }
    return best;
}

double s_value(const InnerSolution& inner, std::span<const double> latencies,
               std::span<const double> alphas, std::span<const double> thetas, double gamma1)
{
    return inner.f_value - g_of_L(latencies, alphas, thetas, gamma1);
}

} // namespace drc
