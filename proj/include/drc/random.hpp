#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace drc {

/// Per-consumer seed from a top-level seed and a fixed label ("data-gen", "alphas", ...).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) noexcept;

/*
 * mt19937_64 with hand-written transforms. The std:: distributions are
 * implementation-defined, so they are avoided to keep outputs identical
 * across standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, bound).
    std::size_t below(std::size_t bound);
    double exponential();
    double standard_normal();

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Symmetric Dirichlet draw with the given concentration (only 1.0 is supported).
std::vector<double> dirichlet_symmetric(std::size_t dim, Rng& rng);

/// Normal(mean, sd) truncated to [lo, hi] by rejection.
std::vector<double> truncated_normal(std::size_t count, double mean, double sd, double lo, double hi,
                                     Rng& rng);

} // namespace drc
