#include <drc/baselines.hpp>
#include <drc/error.hpp>
#include <drc/inner_solver.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace drc {

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::Dro: return "dro";
    case Method::StochasticProgramming: return "sp";
    case Method::RobustOptimization: return "ro";
    }
    return "?";
}

Method parse_method(std::string_view text)
{
    if (text == "dro") return Method::Dro;
    if (text == "sp") return Method::StochasticProgramming;
    if (text == "ro") return Method::RobustOptimization;
    throw Error(ErrorKind::ValidationError, "unknown method '" + std::string(text) + "' (expected dro, sp or ro)");
}

double scenario_objective(std::span<const double> points, std::span<const double> latencies,
                          const AspTypeProfile& profile, const UtilityParams& params)
{
    const auto alphas = profile.alphas();
    const double g = g_of_L(latencies, alphas, profile.thetas(), params.gamma1);
    const auto count = static_cast<double>(points.size());
    double mean = 0.0;
    for (double xi : points) mean += f_n(xi, latencies, 0.0, xi, params, alphas) / count;
    return mean - g;
}

namespace {

SolveReport ascend_on_points(const std::vector<double>& points, const AspTypeProfile& profile,
                             const UtilityParams& params, const BcdConfig& cfg)
{
    params.validate();
    cfg.validate(profile.size());
    if (points.empty()) throw Error(ErrorKind::EmptySampleSet, "no training samples");

    BcdState start;
    start.latencies = cfg.initial_latencies(profile.size());
    start.lambda = 0.0;
    start.xi_stars = points;
    start.objective = scenario_objective(points, start.latencies, profile, params);

    const auto step = [&](const BcdState& s) {
        const auto gradient = grad_L(points, s.latencies, profile, params);
        BcdState next;
        next.latencies = ascend_latencies(s.latencies, gradient, cfg.eta_L, profile.alphas());
        next.lambda = 0.0;
        next.xi_stars = points;
        next.objective = scenario_objective(points, next.latencies, profile, params);
        return next;
    };
    return run_ascent(std::move(start), step, cfg, profile, params.gamma1);
}

} // namespace

SolveReport solve_sp(const QualitySampleSet& samples, const AspTypeProfile& profile,
                     const UtilityParams& params, const BcdConfig& cfg)
{
    return ascend_on_points(samples.values, profile, params, cfg);
}

SolveReport solve_ro(const SupportInterval& support, const AspTypeProfile& profile,
                     const UtilityParams& params, const BcdConfig& cfg)
{
    return ascend_on_points({support.lo()}, profile, params, cfg);
}

} // namespace drc
