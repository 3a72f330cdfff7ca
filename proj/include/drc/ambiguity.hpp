#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace drc {

class SupportInterval {
public:
    SupportInterval(double lo, double hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double diameter() const noexcept { return hi_ - lo_; }
    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

private:
    double lo_;
    double hi_;
};

/// Historical quality observations. Values outside the support are allowed.
struct QualitySampleSet {
    std::vector<double> values;
    std::string provenance;

    std::size_t size() const noexcept { return values.size(); }
};

/// Wasserstein ball radius D * sqrt((2/N) ln(1/(1-tau))).
double radius(std::size_t n_samples, double tau, double diameter);

struct AmbiguityConfig {
    SupportInterval support{60.0, 100.0};
    double tau = 0.99;
    std::size_t n_samples = 200;
    double epsilon = 0.0;

    /// Config whose epsilon is derived from (N, tau, D).
    static AmbiguityConfig derived(SupportInterval support, double tau, std::size_t n_samples);
    /// Config with an explicitly chosen radius (e.g. 0 for the sample-average limit).
    static AmbiguityConfig with_radius(SupportInterval support, double epsilon, std::size_t n_samples);
};

/// Uniform-weight empirical measure. Atoms are kept sorted, duplicates preserved.
class EmpiricalDistribution {
public:
    explicit EmpiricalDistribution(std::span<const double> samples);

    std::size_t size() const noexcept { return atoms_.size(); }
    std::span<const double> atoms() const noexcept { return atoms_; }
    double weight() const noexcept { return 1.0 / static_cast<double>(atoms_.size()); }
    /// Total mass sitting exactly at x.
    double mass_at(double x) const noexcept;

private:
    std::vector<double> atoms_;
};

inline EmpiricalDistribution empirical_distribution(const QualitySampleSet& samples)
{
    return EmpiricalDistribution(samples.values);
}

/// W1 between equal-size uniform empirical measures: mean |p_(k) - q_(k)| over order statistics.
double wasserstein_1d(const EmpiricalDistribution& p, const EmpiricalDistribution& q);

/// Translate every sample downward by magnitude (no clipping).
QualitySampleSet shift_samples(const QualitySampleSet& samples, double magnitude);

/// Overwrite `count` distinct, seeded-random positions with `value`.
QualitySampleSet inject_extreme_points(const QualitySampleSet& samples, std::size_t count, double value,
                                       std::uint64_t seed);

} // namespace drc
