#include "cog/space.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace cog {

namespace {

// Top 53 bits of one engine draw, mapped to [0, 2*pi). Spelled out (rather
// than uniform_real_distribution) so the stream is identical on every
// standard library.
double uniform_angle(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return canonical_angle(u * kTwoPi);
}

PhaseBranch draw_branch(BranchPolicy policy, std::mt19937_64& rng) {
    switch (policy) {
        case BranchPolicy::fixed_plus: return PhaseBranch::plus;
        case BranchPolicy::fixed_minus: return PhaseBranch::minus;
        case BranchPolicy::random: return (rng() & 1u) ? PhaseBranch::minus : PhaseBranch::plus;
    }
    throw std::invalid_argument("sample_cog: unknown branch policy");
}

std::vector<PhaseBranch> branch_values(BranchSet set) {
    switch (set) {
        case BranchSet::plus: return {PhaseBranch::plus};
        case BranchSet::minus: return {PhaseBranch::minus};
        case BranchSet::both: return {PhaseBranch::plus, PhaseBranch::minus};
    }
    throw std::invalid_argument("enumerate_grid: unknown branch set");
}

}  // namespace

std::size_t manifold_dim(std::size_t dim) {
    if (dim < 2)
        throw std::invalid_argument("manifold_dim: dimension must be at least 2");
    return (dim - 1) / 2;
}

Sample sample_cog(const SamplerConfig& cfg) {
    const std::size_t m = manifold_dim(cfg.dim);
    std::mt19937_64 rng(cfg.seed);

    FreePhaseParams params;
    params.dim = cfg.dim;
    params.theta0_branch = draw_branch(cfg.theta0_policy, rng);
    params.free_angles.reserve(m);
    for (std::size_t i = 0; i < m; ++i) params.free_angles.push_back(uniform_angle(rng));
    if (cfg.dim % 2 == 0) params.half_branch = draw_branch(cfg.half_policy, rng);

    CogVector v = synthesize(complete_phases(params));
    return {std::move(v), std::move(params)};
}

GridEnumerator::GridEnumerator(GridConfig cfg)
    : cfg_(std::move(cfg)),
      theta0_values_(branch_values(cfg_.theta0)),
      half_values_(cfg_.dim % 2 == 0 ? branch_values(cfg_.half) : std::vector<PhaseBranch>{}) {
    const std::size_t m = manifold_dim(cfg_.dim);
    if (cfg_.points_per_angle < 1)
        throw std::invalid_argument("enumerate_grid: points_per_angle must be at least 1");

    std::size_t total = theta0_values_.size() * std::max<std::size_t>(half_values_.size(), 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (total > cfg_.cap / cfg_.points_per_angle)
            throw GridTooLargeError("enumerate_grid: grid size exceeds the cap of " +
                                    std::to_string(cfg_.cap) + " points");
        total *= cfg_.points_per_angle;
    }
    if (total > cfg_.cap)
        throw GridTooLargeError("enumerate_grid: grid size " + std::to_string(total) +
                                " exceeds the cap of " + std::to_string(cfg_.cap) + " points");
    count_ = total;
}

std::optional<Sample> GridEnumerator::next() {
    if (emitted_ >= count_) return std::nullopt;

    const std::size_t m = manifold_dim(cfg_.dim);
    const std::size_t half_count = std::max<std::size_t>(half_values_.size(), 1);

    // decode emitted_ as mixed-radix digits: theta_0 branch most significant,
    // then the half branch, then the angle indices (first angle next-most
    // significant, last angle fastest)
    std::size_t rest = emitted_;
    std::size_t angles_total = 1;
    for (std::size_t i = 0; i < m; ++i) angles_total *= cfg_.points_per_angle;

    const std::size_t t0_idx = rest / (half_count * angles_total);
    rest %= half_count * angles_total;
    const std::size_t half_idx = rest / angles_total;
    rest %= angles_total;

    FreePhaseParams params;
    params.dim = cfg_.dim;
    params.theta0_branch = theta0_values_[t0_idx];
    params.free_angles.resize(m);
    for (std::size_t i = m; i-- > 0;) {
        const std::size_t k = rest % cfg_.points_per_angle;
        rest /= cfg_.points_per_angle;
        params.free_angles[i] =
            kTwoPi * static_cast<double>(k) / static_cast<double>(cfg_.points_per_angle);
    }
    if (!half_values_.empty()) params.half_branch = half_values_[half_idx];

    ++emitted_;
    CogVector v = synthesize(complete_phases(params));
    return Sample{std::move(v), std::move(params)};
}

std::vector<Sample> enumerate_grid(const GridConfig& cfg) {
    GridEnumerator grid(cfg);
    std::vector<Sample> out;
    out.reserve(grid.count());
    while (auto sample = grid.next()) out.push_back(std::move(*sample));
    return out;
}

AmbiguousProjectionError::AmbiguousProjectionError(std::size_t bin, double modulus)
    : std::runtime_error("nearest_cog: spectral bin " + std::to_string(bin) + " has modulus " +
                         display_number(modulus) + " below the tie tolerance; no unique projection"),
      bin_(bin) {}

CogVector nearest_cog(const RealVector& v, TiePolicy policy, const Tolerance& tol, double tie_tol) {
    if (!(tie_tol > 0.0))
        throw std::invalid_argument("nearest_cog: tie_tol must be positive");
    ComplexSpectrum spectrum = dft(v, DftPath::fast);
    const std::size_t n = spectrum.size();

    auto project_real_bin = [&](std::size_t bin) {
        if (std::abs(spectrum[bin]) < tie_tol) {
            if (policy == TiePolicy::error) throw AmbiguousProjectionError(bin, std::abs(spectrum[bin]));
            spectrum[bin] = 1.0;
        } else {
            spectrum[bin] = (spectrum[bin].real() < 0.0) ? -1.0 : 1.0;
        }
    };

    project_real_bin(0);
    if (n % 2 == 0) project_real_bin(n / 2);
    for (std::size_t bin = 1; 2 * bin < n; ++bin) {
        const double modulus = std::abs(spectrum[bin]);
        if (modulus < tie_tol) {
            if (policy == TiePolicy::error) throw AmbiguousProjectionError(bin, modulus);
            spectrum[bin] = 1.0;
            spectrum[n - bin] = 1.0;
        } else {
            const auto unit = spectrum[bin] / modulus;
            spectrum[bin] = unit;
            spectrum[n - bin] = std::conj(unit);
        }
    }

    return CogVector(idft_real(spectrum, DftPath::fast), tol.abs_tol);
}

}  // namespace cog
