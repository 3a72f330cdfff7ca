#include <drc/ambiguity.hpp>
#include <drc/error.hpp>
#include <drc/random.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace drc {

SupportInterval::SupportInterval(double lo, double hi)
    : lo_(lo)
    , hi_(hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw Error(ErrorKind::ValidationError, "support interval needs finite lo < hi");
    }
}

double radius(std::size_t n_samples, double tau, double diameter)
{
    if (!(tau > 0.0 && tau < 1.0)) {
        throw Error(ErrorKind::InvalidConfidence, "tau must lie in (0, 1)");
    }
    if (n_samples == 0) throw Error(ErrorKind::EmptySampleSet, "radius needs N >= 1");
    if (!(diameter > 0.0)) throw Error(ErrorKind::InvalidArgument, "diameter must be positive");
    return diameter * std::sqrt(2.0 / static_cast<double>(n_samples) * std::log(1.0 / (1.0 - tau)));
}

AmbiguityConfig AmbiguityConfig::derived(SupportInterval support, double tau, std::size_t n_samples)
{
    const double eps = radius(n_samples, tau, support.diameter());
    return {support, tau, n_samples, eps};
}

AmbiguityConfig AmbiguityConfig::with_radius(SupportInterval support, double epsilon, std::size_t n_samples)
{
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::ValidationError, "epsilon must be finite and >= 0");
    }
    return {support, 0.0, n_samples, epsilon};
}

EmpiricalDistribution::EmpiricalDistribution(std::span<const double> samples)
    : atoms_(samples.begin(), samples.end())
{
    if (atoms_.empty()) throw Error(ErrorKind::EmptySampleSet, "empirical distribution needs N >= 1");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!std::isfinite(atoms_[i])) throw Error(ErrorKind::InvalidArgument, "non-finite sample", i);
    }
    std::sort(atoms_.begin(), atoms_.end());
}

double EmpiricalDistribution::mass_at(double x) const noexcept
{
    const auto [first, last] = std::equal_range(atoms_.begin(), atoms_.end(), x);
    return static_cast<double>(last - first) * weight();
}

double wasserstein_1d(const EmpiricalDistribution& p, const EmpiricalDistribution& q)
{
    if (p.size() != q.size()) {
        throw Error(ErrorKind::SizeMismatch, "wasserstein_1d needs equal sample counts");
    }
    const auto a = p.atoms();
    const auto b = q.atoms();
    double total = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) total += std::abs(a[k] - b[k]);
    return total / static_cast<double>(a.size());
}

QualitySampleSet shift_samples(const QualitySampleSet& samples, double magnitude)
{
    if (!(magnitude >= 0.0)) throw Error(ErrorKind::InvalidArgument, "shift magnitude must be >= 0");
    QualitySampleSet out{samples.values, samples.provenance};
    for (auto& x : out.values) x -= magnitude;
    return out;
}

QualitySampleSet inject_extreme_points(const QualitySampleSet& samples, std::size_t count, double value,
                                       std::uint64_t seed)
{
    const std::size_t n = samples.size();
    if (count > n) {
        throw Error(ErrorKind::CountExceedsN, "cannot replace " + std::to_string(count) + " of " +
                                                  std::to_string(n) + " samples");
    }
    QualitySampleSet out{samples.values, samples.provenance};
    if (count == 0) return out;

    // Partial Fisher-Yates: the first `count` slots of the permutation are the replaced positions.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t j = k + rng.below(n - k);
        std::swap(order[k], order[j]);
        out.values[order[k]] = value;
    }
    return out;
}

} // namespace drc
