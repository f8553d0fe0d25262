#include <cmath>
#include <random>
#include <vector>

#include "cog/synth.hpp"
#include "cog/verify.hpp"
#include "doctest.h"

using namespace cog;

namespace {

// exact phases of the cog (2/3, 2/3, -1/3): (pi/4, 23*pi/12, 7*pi/12)
const std::vector<double> kExactPhases = {kQuarterPi, 23.0 * kPi / 12.0, 7.0 * kPi / 12.0};
const std::vector<double> kRoundedPhases = {kQuarterPi, 6.021386, 1.832596};

double uniform_angle(std::mt19937_64& rng) {
    return kTwoPi * ((rng() >> 11) * 0x1.0p-53);
}

FreePhaseParams random_params(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FreePhaseParams p;
    p.dim = dim;
    p.theta0_branch = (rng() & 1) ? PhaseBranch::minus : PhaseBranch::plus;
    for (std::size_t i = 0; i < (dim - 1) / 2; ++i) p.free_angles.push_back(uniform_angle(rng));
    if (dim % 2 == 0) p.half_branch = (rng() & 1) ? PhaseBranch::minus : PhaseBranch::plus;
    return p;
}

}  // namespace

TEST_CASE("branch_angle maps the two branches to pi/4 and 5*pi/4") {
    CHECK(branch_angle(PhaseBranch::plus) == kQuarterPi);
    CHECK(branch_angle(PhaseBranch::minus) == kFiveQuarterPi);
}

TEST_CASE("validate_phases accepts exact and six-decimal phase lists") {
    const PhaseRepresentation exact = validate_phases(kExactPhases, 1e-12);
    CHECK(exact.dim() == 3);
    CHECK(exact.constraint_residual() <= 1e-12);

    const PhaseRepresentation rounded = validate_phases(kRoundedPhases);  // default tolerance
    CHECK(rounded.constraint_residual() == doctest::Approx(3.66e-7).epsilon(0.05));
}

TEST_CASE("validate_phases canonicalizes angles before checking") {
    const PhaseRepresentation rep =
        validate_phases({kQuarterPi - kTwoPi, kExactPhases[1] + kTwoPi, kExactPhases[2]}, 1e-9);
    CHECK(rep.theta(0) == doctest::Approx(kQuarterPi).epsilon(1e-12));
    CHECK(rep.theta(1) == doctest::Approx(kExactPhases[1]).epsilon(1e-12));
}

TEST_CASE("validate_phases reports the first violated constraint") {
    try {
        validate_phases({0.0, 1.0, kPi / 2.0 - 1.0});
        FAIL("expected theta_0 violation");
    } catch (const PhaseConstraintError& e) {
        CHECK(e.kind() == PhaseConstraintError::Kind::theta0);
        CHECK(e.index() == 0);
    }

    try {
        validate_phases({kQuarterPi, kPi / 2.0, kPi / 2.0});
        FAIL("expected pair-sum violation");
    } catch (const PhaseConstraintError& e) {
        CHECK(e.kind() == PhaseConstraintError::Kind::pair_sum);
        CHECK(e.index() == 1);
    }

    try {
        validate_phases({kQuarterPi, 1.0, 0.0, kPi / 2.0 - 1.0});
        FAIL("expected half-index violation");
    } catch (const PhaseConstraintError& e) {
        CHECK(e.kind() == PhaseConstraintError::Kind::half_index);
        CHECK(e.index() == 2);
    }
}

TEST_CASE("validate_phases rejects malformed input") {
    CHECK_THROWS_AS(validate_phases({kQuarterPi}), std::invalid_argument);
    CHECK_THROWS_AS(validate_phases({kQuarterPi, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(validate_phases(kExactPhases, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(validate_phases(kExactPhases, 0.5), std::invalid_argument);
}

TEST_CASE("complete_phases derives the partner angles") {
    FreePhaseParams p;
    p.dim = 3;
    p.theta0_branch = PhaseBranch::plus;
    p.free_angles = {6.021386};
    const PhaseRepresentation rep = complete_phases(p);
    CHECK(rep.theta(0) == kQuarterPi);
    CHECK(rep.theta(1) == doctest::Approx(6.021386).epsilon(1e-15));
    CHECK(rep.theta(2) == doctest::Approx(canonical_angle(kPi / 2.0 - 6.021386)).epsilon(1e-15));
    CHECK(rep.constraint_residual() <= 1e-12);
}

TEST_CASE("complete_phases pins both constrained phases for even dimension") {
    FreePhaseParams p;
    p.dim = 4;
    p.theta0_branch = PhaseBranch::plus;
    p.free_angles = {1.0};
    p.half_branch = PhaseBranch::minus;
    const PhaseRepresentation rep = complete_phases(p);
    CHECK(rep.theta(0) == kQuarterPi);
    CHECK(rep.theta(1) == 1.0);
    CHECK(rep.theta(2) == kFiveQuarterPi);
    CHECK(rep.theta(3) == doctest::Approx(kPi / 2.0 - 1.0).epsilon(1e-15));

    FreePhaseParams two;
    two.dim = 2;
    two.theta0_branch = PhaseBranch::plus;
    two.half_branch = PhaseBranch::plus;
    const PhaseRepresentation rep2 = complete_phases(two);
    CHECK(rep2.theta(0) == kQuarterPi);
    CHECK(rep2.theta(1) == kQuarterPi);
}

TEST_CASE("complete_phases rejects inconsistent parameters") {
    FreePhaseParams p;
    p.dim = 3;
    p.theta0_branch = PhaseBranch::plus;
    SUBCASE("wrong free angle count") {
        p.free_angles = {1.0, 2.0};
        CHECK_THROWS_AS(complete_phases(p), std::invalid_argument);
    }
    SUBCASE("half branch on odd dimension") {
        p.free_angles = {1.0};
        p.half_branch = PhaseBranch::plus;
        CHECK_THROWS_AS(complete_phases(p), std::invalid_argument);
    }
    SUBCASE("missing half branch on even dimension") {
        p.dim = 4;
        p.free_angles = {1.0};
        CHECK_THROWS_AS(complete_phases(p), std::invalid_argument);
    }
}

TEST_CASE("synthesize reproduces the known cog from its exact phases") {
    const CogVector v = synthesize(validate_phases(kExactPhases, 1e-12));
    CHECK(v.vector()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(v.vector()[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(v.vector()[2] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(v.tolerance() == 1e-9);
}

TEST_CASE("synthesize tolerates six-decimal phases with matching slack") {
    const CogVector v = synthesize(validate_phases(kRoundedPhases));
    CHECK(std::abs(v.vector()[0] - 2.0 / 3.0) < 2e-6);
    CHECK(std::abs(v.vector()[1] - 2.0 / 3.0) < 2e-6);
    CHECK(std::abs(v.vector()[2] + 1.0 / 3.0) < 2e-6);
    CHECK(v.tolerance() > 1e-9);  // widened by the recorded constraint residual
}

TEST_CASE("flat pi/4 phases synthesize the first basis vector") {
    for (const std::size_t dim : {2, 3, 8}) {
        const CogVector v = synthesize(validate_phases(std::vector<double>(dim, kQuarterPi), 1e-12));
        CHECK(std::abs(v.vector()[0] - 1.0) < 1e-12);
        for (std::size_t j = 1; j < dim; ++j) CHECK(std::abs(v.vector()[j]) < 1e-12);
    }
}

TEST_CASE("the two-dimensional minus branch synthesizes -e2") {
    const CogVector v = synthesize(validate_phases({kFiveQuarterPi, kQuarterPi}, 1e-12));
    CHECK(std::abs(v.vector()[0]) < 1e-12);
    CHECK(std::abs(v.vector()[1] + 1.0) < 1e-12);
}

TEST_CASE("component sum sign follows the theta_0 branch") {
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        FreePhaseParams p = random_params(7, seed);
        p.theta0_branch = PhaseBranch::plus;
        CHECK(component_sum(synthesize(complete_phases(p)).vector()) ==
              doctest::Approx(1.0).epsilon(1e-9));
        p.theta0_branch = PhaseBranch::minus;
        CHECK(component_sum(synthesize(complete_phases(p)).vector()) ==
              doctest::Approx(-1.0).epsilon(1e-9));
    }
}

TEST_CASE("synthesis is invariant under full-turn phase shifts") {
    FreePhaseParams p = random_params(5, 77);
    const CogVector base = synthesize(complete_phases(p));
    std::vector<double> shifted = complete_phases(p).theta();
    for (double& t : shifted) t += kTwoPi;
    const CogVector turned = synthesize(validate_phases(std::move(shifted), 1e-9));
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(turned.vector()[j] == doctest::Approx(base.vector()[j]).epsilon(1e-12));
    }
}

TEST_CASE("random free parameters synthesize verified cogs across dimensions") {
    for (std::size_t dim = 2; dim <= 12; ++dim) {
        for (std::uint64_t i = 0; i < 25; ++i) {
            const FreePhaseParams params = random_params(dim, dim * 1000 + i);
            const CogVector v = synthesize(complete_phases(params));
            const VerificationReport report = is_cog_direct(v.vector());
            CHECK(report.is_cog);
            CHECK(report.max_deviation <= 1e-9);
        }
    }
}
