#include <drc/random.hpp>
#include <drc/error.hpp>

#include <cmath>
#include <numbers>

namespace drc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(splitmix64(seed) ^ h);
}

double Rng::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::below(std::size_t bound)
{
    if (bound == 0) throw Error(ErrorKind::InvalidArgument, "Rng::below needs a positive bound");
    const std::uint64_t b = bound;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % b);
}

double Rng::exponential()
{
    return -std::log1p(-uniform());
}

double Rng::standard_normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1;
    do {
        u1 = uniform();
    } while (u1 == 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

std::vector<double> dirichlet_symmetric(std::size_t dim, Rng& rng)
{
    if (dim == 0) throw Error(ErrorKind::InvalidArgument, "Dirichlet dimension must be >= 1");
    std::vector<double> draw(dim);
    double total = 0.0;
    for (auto& x : draw) {
        // Gamma(1, 1) is Exp(1); keep strictly positive so every type has mass.
        do {
            x = rng.exponential();
        } while (x == 0.0);
        total += x;
    }
    for (auto& x : draw) x /= total;
    // Fold the rounding residue into the largest entry so the sum is 1 to within an ulp or two.
    double sum = 0.0;
    std::size_t largest = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        sum += draw[i];
        if (draw[i] > draw[largest]) largest = i;
    }
    draw[largest] += 1.0 - sum;
    return draw;
}

std::vector<double> truncated_normal(std::size_t count, double mean, double sd, double lo, double hi,
                                     Rng& rng)
{
    if (!(sd > 0.0) || !(lo < hi)) {
        throw Error(ErrorKind::InvalidArgument, "truncated normal needs sd > 0 and lo < hi");
    }
    std::vector<double> out;
    out.reserve(count);
    std::size_t attempts = 0;
    while (out.size() < count) {
        const double x = mean + sd * rng.standard_normal();
        if (x >= lo && x <= hi) out.push_back(x);
        if (++attempts > 1000 * (count + 1)) {
            throw Error(ErrorKind::InvalidArgument, "truncated normal acceptance rate too low");
        }
    }
    return out;
}

} // namespace drc
