#include <drc/error.hpp>
#include <drc/objective.hpp>

#include <exception>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drc {

void DroProblem::validate() const
{
    params.validate();
    if (samples.size() == 0) throw Error(ErrorKind::EmptySampleSet, "no training samples");
    if (ambiguity.n_samples != samples.size()) {
        throw Error(ErrorKind::SizeMismatch, "ambiguity config built for N = " +
                                                 std::to_string(ambiguity.n_samples) + " but got " +
                                                 std::to_string(samples.size()) + " samples");
    }
    inner.validate(ambiguity.support.diameter());
}

namespace {

void check_iterate(const DroProblem& problem, std::span<const double> latencies, double lambda)
{
    if (latencies.size() != problem.profile.size()) {
        throw Error(ErrorKind::SizeMismatch, "latency vector length differs from the number of types");
    }
    require_nondecreasing(latencies);
    if (!(lambda >= 0.0)) throw Error(ErrorKind::InvalidArgument, "lambda must be >= 0");
}

double reduce(const DroProblem& problem, double lambda, std::span<const double> s_values)
{
    double mean = 0.0;
    const auto count = static_cast<double>(s_values.size());
    for (double s : s_values) mean += s / count;
    return -lambda * problem.ambiguity.epsilon + mean;
}

} // namespace

ObjectiveValue objective_serial(const DroProblem& problem, std::span<const double> latencies, double lambda)
{
    check_iterate(problem, latencies, lambda);
    const auto& profile = problem.profile;
    const double g = g_of_L(latencies, profile.alphas(), profile.thetas(), problem.params.gamma1);
    const auto anchors = std::span<const double>(problem.samples.values);

    ObjectiveValue out;
    out.xi_stars.resize(anchors.size());
    out.s_values.resize(anchors.size());
    for (std::size_t n = 0; n < anchors.size(); ++n) {
        const auto sol = solve_inner(latencies, lambda, anchors[n], problem.ambiguity.support,
                                     problem.params, profile.alphas(), problem.inner);
        out.xi_stars[n] = sol.xi_star;
        out.s_values[n] = sol.f_value - g;
    }
    out.omega = reduce(problem, lambda, out.s_values);
    return out;
}

ObjectiveValue objective_parallel(const DroProblem& problem, std::span<const double> latencies, double lambda)
{
    check_iterate(problem, latencies, lambda);
    const auto& profile = problem.profile;
    const double g = g_of_L(latencies, profile.alphas(), profile.thetas(), problem.params.gamma1);
    const auto anchors = std::span<const double>(problem.samples.values);
    const auto count = static_cast<long>(anchors.size());

    ObjectiveValue out;
    out.xi_stars.resize(anchors.size());
    out.s_values.resize(anchors.size());

    // Exceptions cannot leave an OpenMP region; keep the one from the lowest index.
    std::exception_ptr failure;
    long failed_at = std::numeric_limits<long>::max();

#pragma omp parallel for schedule(static)
    for (long n = 0; n < count; ++n) {
        try {
            const auto sol = solve_inner(latencies, lambda, anchors[n], problem.ambiguity.support,
                                         problem.params, profile.alphas(), problem.inner);
            out.xi_stars[n] = sol.xi_star;
            out.s_values[n] = sol.f_value - g;
        } catch (...) {
#pragma omp critical(drc_objective_failure)
            {
                if (n < failed_at) {
                    failed_at = n;
                    failure = std::current_exception();
                }
            }
        }
    }
    if (failure) std::rethrow_exception(failure);

    out.omega = reduce(problem, lambda, out.s_values);
    return out;
}

ObjectiveValue objective(const DroProblem& problem, std::span<const double> latencies, double lambda,
                         Execution exec)
{
    return exec == Execution::Serial ? objective_serial(problem, latencies, lambda)
                                     : objective_parallel(problem, latencies, lambda);
}

int parallel_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace drc
