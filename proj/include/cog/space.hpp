// space.hpp - navigate the set of all cogs in R^N.
//
// For N >= 3 the cog set is homeomorphic to
// {pi/4, 5*pi/4} x [0, 2*pi)^floor((N-1)/2): two disjoint tori of dimension
// floor((N-1)/2), plus one extra sign choice for theta_{N/2} when N is even.
// This module samples that chart uniformly, enumerates regular lattices on
// it, and projects arbitrary vectors onto the cog set through the spectrum
// (every bin normalized to modulus 1, which is the Euclidean-nearest cog by
// Parseval).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cog/core.hpp"
#include "cog/synth.hpp"

namespace cog {

/// Dimension of the cog manifold chart: floor((N-1)/2).
std::size_t manifold_dim(std::size_t dim);

enum class BranchPolicy { fixed_plus, fixed_minus, random };

struct SamplerConfig {
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    BranchPolicy theta0_policy = BranchPolicy::fixed_plus;
    BranchPolicy half_policy = BranchPolicy::fixed_plus;  // even dim only
};

struct Sample {
    CogVector vector;
    FreePhaseParams params;
};

/// Draw one cog uniformly on the torus chart. Deterministic: the generator
/// is std::mt19937_64 seeded with cfg.seed, angles are built from the top
/// 53 bits of each draw, and the draw order is fixed (theta_0 branch, free
/// angles ascending, then the theta_{N/2} branch).
Sample sample_cog(const SamplerConfig& cfg);

/// Which values a sign-constrained phase runs over during enumeration.
enum class BranchSet { plus, minus, both };

struct GridConfig {
    std::size_t dim = 2;
    std::size_t points_per_angle = 1;
    BranchSet theta0 = BranchSet::plus;
    BranchSet half = BranchSet::plus;  // ignored for odd dim
    std::size_t cap = 1'000'000;
};

class GridTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lattice enumeration over the chart: free angles phi = 2*pi*k/points,
/// k in {0,...,points-1}. Order: theta_0 branch outermost (plus first),
/// then the theta_{N/2} branch, then the free-angle tuple lexicographically
/// with the first angle most significant.
class GridEnumerator {
public:
    explicit GridEnumerator(GridConfig cfg);  // throws GridTooLargeError past cfg.cap

    std::size_t count() const noexcept { return count_; }
    std::optional<Sample> next();

private:
    GridConfig cfg_;
    std::vector<PhaseBranch> theta0_values_;
    std::vector<PhaseBranch> half_values_;
    std::size_t count_ = 0;
    std::size_t emitted_ = 0;
};

/// Convenience: materialize the whole grid.
std::vector<Sample> enumerate_grid(const GridConfig& cfg);

/// Behavior when a spectral bin has (near-)zero modulus during projection:
/// error out naming the bin, or pin the bin (and its conjugate partner) to 1.
enum class TiePolicy { error, unit_phase };

class AmbiguousProjectionError : public std::runtime_error {
public:
    AmbiguousProjectionError(std::size_t bin, double modulus);
    std::size_t bin() const noexcept { return bin_; }

private:
    std::size_t bin_;
};

/// Euclidean projection onto the cog set: normalize every DFT bin to
/// modulus 1 (the real bins 0 and N/2 go to +-1) and transform back.
/// Globally optimal by Parseval; idempotent on cogs to within 1e-12.
/// Bins with modulus below tie_tol are handled per policy.
CogVector nearest_cog(const RealVector& v, TiePolicy policy = TiePolicy::error,
                      const Tolerance& tol = {}, double tie_tol = 1e-12);

}  // namespace cog
