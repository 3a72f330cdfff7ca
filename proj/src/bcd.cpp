#include <drc/bcd.hpp>
#include <drc/error.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace drc {

void BcdConfig::validate(std::size_t n_types) const
{
    if (max_iters < 1) throw Error(ErrorKind::ValidationError, "max_iters must be >= 1");
    if (!(conv_tol > 0.0)) throw Error(ErrorKind::ValidationError, "conv_tol must be > 0");
    if (!(eta_L >= 0.0) || !std::isfinite(eta_L)) throw Error(ErrorKind::ValidationError, "eta_L must be >= 0");
    if (!(eta_lambda >= 0.0) || !std::isfinite(eta_lambda)) {
        throw Error(ErrorKind::ValidationError, "eta_lambda must be >= 0");
    }
    if (!(lambda_init >= 0.0) || !std::isfinite(lambda_init)) {
        throw Error(ErrorKind::ValidationError, "lambda_init must be >= 0");
    }
    if (!L_init.empty()) {
        if (L_init.size() != n_types) throw Error(ErrorKind::ValidationError, "L_init length differs from I");
        for (double x : L_init) {
            if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::ValidationError, "L_init must be >= 0");
        }
        if (!is_nondecreasing(L_init)) throw Error(ErrorKind::ValidationError, "L_init must be nondecreasing");
    }
}

std::vector<double> BcdConfig::initial_latencies(std::size_t n_types) const
{
    return L_init.empty() ? std::vector<double>(n_types, 0.0) : L_init;
}

std::vector<double> grad_L(std::span<const double> xi_stars, std::span<const double> latencies,
                           const AspTypeProfile& profile, const UtilityParams& params)
{
    if (latencies.size() != profile.size()) {
        throw Error(ErrorKind::SizeMismatch, "latency vector length differs from the number of types");
    }
    if (xi_stars.empty()) throw Error(ErrorKind::EmptySampleSet, "grad_L needs at least one xi*");
    const auto alphas = profile.alphas();
    const auto thetas = profile.thetas();
    const auto count = static_cast<double>(xi_stars.size());

    std::vector<double> grad(latencies.size());
    for (std::size_t i = 0; i < latencies.size(); ++i) {
        double benefit = 0.0;
        for (std::size_t n = 0; n < xi_stars.size(); ++n) {
            const double denom = params.gamma2 * xi_stars[n] + params.gamma3 * latencies[i];
            if (!(denom > 0.0)) {
                throw Error(ErrorKind::NonPositiveDenominator,
                            "gamma2*xi*_n + gamma3*L_i <= 0 for n = " + std::to_string(n), i);
            }
            benefit += params.gamma3 / denom;
        }
        grad[i] = alphas[i] * (benefit / count - params.gamma1 / thetas[i]);
    }
    return grad;
}

double grad_lambda(std::span<const double> xi_stars, std::span<const double> anchors, double epsilon)
{
    if (xi_stars.size() != anchors.size()) {
        throw Error(ErrorKind::SizeMismatch, "xi* and anchors differ in length");
    }
    if (xi_stars.empty()) throw Error(ErrorKind::EmptySampleSet, "grad_lambda needs at least one sample");
    double transport = 0.0;
    for (std::size_t n = 0; n < xi_stars.size(); ++n) transport += std::abs(xi_stars[n] - anchors[n]);
    return -epsilon + transport / static_cast<double>(xi_stars.size());
}

std::vector<double> iron_monotone(std::span<const double> values, std::span<const double> weights)
{
    if (values.size() != weights.size()) throw Error(ErrorKind::SizeMismatch, "values and weights differ in length");

    struct Block {
        double weight;
        double weighted_sum;
        double plain_sum;
        std::size_t count;

        double level() const
        {
            if (count == 1) return plain_sum;
            return weight > 0.0 ? weighted_sum / weight : plain_sum / static_cast<double>(count);
        }
    };
    std::vector<Block> blocks;
    blocks.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        blocks.push_back({weights[i], weights[i] * values[i], values[i], 1});
        while (blocks.size() > 1 && blocks[blocks.size() - 2].level() > blocks.back().level()) {
            const Block top = blocks.back();
            blocks.pop_back();
            auto& b = blocks.back();
            b.weight += top.weight;
            b.weighted_sum += top.weighted_sum;
            b.plain_sum += top.plain_sum;
            b.count += top.count;
        }
    }

    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& b : blocks) out.insert(out.end(), b.count, b.level());
    return out;
}

std::vector<double> ascend_latencies(std::span<const double> latencies, std::span<const double> gradient,
                                     double eta, std::span<const double> alphas)
{
    std::vector<double> moved(latencies.size());
    for (std::size_t i = 0; i < latencies.size(); ++i) moved[i] = latencies[i] + eta * gradient[i];
    auto ironed = iron_monotone(moved, alphas);
    for (auto& x : ironed) x = std::max(x, 0.0);
    return ironed;
}

BcdState initial_state(const DroProblem& problem, const BcdConfig& cfg)
{
    BcdState state;
    state.latencies = cfg.initial_latencies(problem.profile.size());
    state.lambda = cfg.lambda_init;
    auto value = objective(problem, state.latencies, state.lambda, cfg.execution);
    state.xi_stars = std::move(value.xi_stars);
    state.s_values = std::move(value.s_values);
    state.objective = value.omega;
    return state;
}

BcdState bcd_step(const BcdState& state, const DroProblem& problem, const BcdConfig& cfg)
{
    // s-block
    const auto inner = objective(problem, state.latencies, state.lambda, cfg.execution);

    // L-block
    const auto gradient = grad_L(inner.xi_stars, state.latencies, problem.profile, problem.params);
    BcdState next;
    next.latencies = ascend_latencies(state.latencies, gradient, cfg.eta_L, problem.profile.alphas());

    // lambda-block
    const double dlambda = grad_lambda(inner.xi_stars, problem.samples.values, problem.ambiguity.epsilon);
    next.lambda = std::max(state.lambda + cfg.eta_lambda * dlambda, 0.0);

    auto value = objective(problem, next.latencies, next.lambda, cfg.execution);
    next.xi_stars = std::move(value.xi_stars);
    next.s_values = std::move(value.s_values);
    next.objective = value.omega;
    return next;
}

SolveReport run_ascent(BcdState initial, const StepFunction& step, const BcdConfig& cfg,
                       const AspTypeProfile& profile, double gamma1)
{
    SolveReport report;
    report.initial_objective = initial.objective;

    BcdState state = std::move(initial);
    double best = -std::numeric_limits<double>::infinity();
    for (int itr = 0; itr < cfg.max_iters; ++itr) {
        state = step(state);
        if (!is_nondecreasing(state.latencies) || !(state.lambda >= 0.0)) {
            throw std::logic_error("ascent step left the feasible region (L monotone, lambda >= 0)");
        }
        ++report.iterations_used;
        report.objective_trace.push_back(state.objective);
        report.lambda_trace.push_back(state.lambda);
        report.latency_trace.push_back(state.latencies);
        if (std::abs(best - state.objective) <= cfg.conv_tol) {
            report.converged = true;
            break;
        }
        best = state.objective;
    }

    report.final_lambda = state.lambda;
    report.menu = make_menu(state.latencies, profile, gamma1);
    return report;
}

SolveReport solve(const DroProblem& problem, const BcdConfig& cfg)
{
    problem.validate();
    cfg.validate(problem.profile.size());
    return run_ascent(
        initial_state(problem, cfg),
        [&](const BcdState& s) { return bcd_step(s, problem, cfg); },
        cfg, problem.profile, problem.params.gamma1);
}

} // namespace drc
