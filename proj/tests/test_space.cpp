#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cog/space.hpp"
#include "cog/verify.hpp"
#include "doctest.h"

using namespace cog;

namespace {

double euclidean_distance(const RealVector& a, const RealVector& b) {
    double d2 = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const double d = a[j] - b[j];
        d2 += d * d;
    }
    return std::sqrt(d2);
}

RealVector random_vector(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> a(dim);
    for (double& x : a) x = 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
    return RealVector(std::move(a));
}

}  // namespace

TEST_CASE("manifold_dim is floor((N-1)/2)") {
    CHECK(manifold_dim(2) == 0);
    CHECK(manifold_dim(3) == 1);
    CHECK(manifold_dim(4) == 1);
    CHECK(manifold_dim(5) == 2);
    CHECK(manifold_dim(64) == 31);
    CHECK(manifold_dim(65) == 32);
    CHECK_THROWS_AS(manifold_dim(1), std::invalid_argument);
}

TEST_CASE("sample_cog is deterministic for a fixed configuration") {
    SamplerConfig cfg;
    cfg.dim = 9;
    cfg.seed = 12345;
    cfg.theta0_policy = BranchPolicy::random;
    cfg.half_policy = BranchPolicy::random;
    const Sample a = sample_cog(cfg);
    const Sample b = sample_cog(cfg);
    CHECK(a.vector.vector() == b.vector.vector());  // bit-identical

    cfg.seed = 12346;
    const Sample c = sample_cog(cfg);
    CHECK_FALSE(a.vector.vector() == c.vector.vector());
}

TEST_CASE("sample_cog output verifies and matches its own parameters") {
    for (const std::size_t dim : {2, 3, 4, 9, 16}) {
        SamplerConfig cfg;
        cfg.dim = dim;
        cfg.seed = 500 + dim;
        const Sample s = sample_cog(cfg);
        CHECK(is_cog_direct(s.vector.vector()).is_cog);
        CHECK(s.params.dim == dim);
        CHECK(s.params.free_angles.size() == manifold_dim(dim));
        CHECK(s.params.half_branch.has_value() == (dim % 2 == 0));
        const CogVector rebuilt = synthesize(complete_phases(s.params));
        CHECK(rebuilt.vector() == s.vector.vector());  // the sampler is the chart, exactly
    }
}

TEST_CASE("the zero-dimensional chart pins the two-dimensional samples") {
    SamplerConfig cfg;
    cfg.dim = 2;
    cfg.theta0_policy = BranchPolicy::fixed_plus;
    cfg.half_policy = BranchPolicy::fixed_plus;
    const Sample s = sample_cog(cfg);
    CHECK(std::abs(s.vector.vector()[0] - 1.0) < 1e-12);
    CHECK(std::abs(s.vector.vector()[1]) < 1e-12);
}

TEST_CASE("random branch policy reaches both component-sum signs") {
    bool saw_plus = false, saw_minus = false;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        SamplerConfig cfg;
        cfg.dim = 5;
        cfg.seed = seed;
        cfg.theta0_policy = BranchPolicy::random;
        const double sum = component_sum(sample_cog(cfg).vector.vector());
        (sum > 0 ? saw_plus : saw_minus) = true;
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
}

TEST_CASE("the two-dimensional grid is the four signed basis vectors") {
    GridConfig cfg;
    cfg.dim = 2;
    cfg.points_per_angle = 1;
    cfg.theta0 = BranchSet::both;
    cfg.half = BranchSet::both;
    const std::vector<Sample> grid = enumerate_grid(cfg);
    REQUIRE(grid.size() == 4);
    const std::vector<RealVector> expected = {
        RealVector({1.0, 0.0}), RealVector({0.0, 1.0}), RealVector({0.0, -1.0}),
        RealVector({-1.0, 0.0})};
    for (const RealVector& want : expected) {
        const bool found = std::any_of(grid.begin(), grid.end(), [&](const Sample& s) {
            return euclidean_distance(s.vector.vector(), want) < 1e-12;
        });
        CHECK(found);
    }
}

TEST_CASE("grid enumeration covers the free angles in lattice order") {
    GridConfig cfg;
    cfg.dim = 3;
    cfg.points_per_angle = 4;
    cfg.theta0 = BranchSet::plus;
    GridEnumerator grid(cfg);
    CHECK(grid.count() == 4);
    std::size_t emitted = 0;
    while (auto s = grid.next()) {
        CHECK(s->params.free_angles[0] ==
              doctest::Approx(kTwoPi * emitted / 4.0).epsilon(1e-15));
        CHECK(is_cog_direct(s->vector.vector()).is_cog);
        ++emitted;
    }
    CHECK(emitted == 4);
}

TEST_CASE("grid size multiplies branches and lattice points") {
    GridConfig cfg;
    cfg.dim = 4;  // one free angle plus the theta_{N/2} branch
    cfg.points_per_angle = 3;
    cfg.theta0 = BranchSet::both;
    cfg.half = BranchSet::both;
    CHECK(GridEnumerator(cfg).count() == 12);

    cfg.dim = 5;  // two free angles, no half branch
    cfg.theta0 = BranchSet::minus;
    CHECK(GridEnumerator(cfg).count() == 9);
}

TEST_CASE("grids past the cap are refused, including overflowing ones") {
    GridConfig cfg;
    cfg.dim = 41;  // twenty free angles
    cfg.points_per_angle = 3;
    CHECK_THROWS_AS(GridEnumerator{cfg}, GridTooLargeError);
    cfg.points_per_angle = 10;  // 10^20 overflows 64-bit arithmetic if multiplied blindly
    CHECK_THROWS_AS(GridEnumerator{cfg}, GridTooLargeError);
}

TEST_CASE("nearest_cog fixes cogs and is idempotent") {
    const RealVector known({2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0});
    const CogVector projected = nearest_cog(known);
    CHECK(euclidean_distance(projected.vector(), known) < 1e-12);

    const RealVector scattered = random_vector(8, 404);
    const CogVector once = nearest_cog(scattered);
    const CogVector twice = nearest_cog(once.vector());
    CHECK(euclidean_distance(once.vector(), twice.vector()) < 1e-12);
}

TEST_CASE("nearest_cog projects a stretched basis vector back onto the set") {
    const CogVector projected = nearest_cog(RealVector({2.0, 0.0, 0.0, 0.0}));
    CHECK(projected.vector()[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t j = 1; j < 4; ++j) CHECK(std::abs(projected.vector()[j]) < 1e-12);
    CHECK(euclidean_distance(projected.vector(), RealVector({2.0, 0.0, 0.0, 0.0})) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nearest_cog surfaces ambiguous bins per the tie policy") {
    const RealVector flat({1.0, 1.0, 1.0});  // bins 1 and 2 vanish
    try {
        nearest_cog(flat);
        FAIL("expected AmbiguousProjectionError");
    } catch (const AmbiguousProjectionError& e) {
        CHECK(e.bin() == 1);
    }

    const CogVector pinned = nearest_cog(flat, TiePolicy::unit_phase);
    CHECK(pinned.vector()[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(pinned.vector()[1]) < 1e-12);
    CHECK(std::abs(pinned.vector()[2]) < 1e-12);
}

TEST_CASE("nearest_cog beats a fine parameter grid at desk scale") {
    GridConfig cfg;
    cfg.dim = 3;
    cfg.points_per_angle = 1000;
    cfg.theta0 = BranchSet::both;
    const std::vector<Sample> grid = enumerate_grid(cfg);
    REQUIRE(grid.size() == 2000);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RealVector v = random_vector(3, 7000 + seed);
        const ComplexSpectrum s = dft(v);
        bool degenerate = false;
        for (std::size_t n = 0; n < 3; ++n) degenerate = degenerate || std::abs(s[n]) < 0.05;
        if (degenerate) continue;
        const double achieved = euclidean_distance(nearest_cog(v).vector(), v);
        double best = 1e300;
        for (const Sample& g : grid) {
            best = std::min(best, euclidean_distance(g.vector.vector(), v));
        }
        CHECK(achieved <= best + 1e-6);
    }
}

TEST_CASE("nearest_cog output verifies as a cog") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t dim = 2 + seed % 9;
        const RealVector v = random_vector(dim, 9000 + seed);
        const ComplexSpectrum s = dft(v);
        bool degenerate = false;
        for (std::size_t n = 0; n < dim; ++n) degenerate = degenerate || std::abs(s[n]) < 1e-6;
        if (degenerate) continue;
        CHECK(is_cog_direct(nearest_cog(v).vector()).is_cog);
    }
}
