// synth.hpp - construct cogs from phase parameters.
//
// Every cog in R^N has the canonical form
//
//   a_k = (sqrt(2)/N) sum_{n=0..N-1} cos(2*pi*n*(k-1)/N + theta_n)
//
// and conversely this formula produces a cog whenever the phases satisfy
//
//   theta_0 = pi/4 or 5*pi/4            (mod 2*pi)
//   theta_n + theta_{N-n} = pi/2        (mod 2*pi), n in {1,...,N-1}.
//
// The pair constraint forces theta_{N/2} into {pi/4, 5*pi/4} for even N
// (it pairs with itself). The free parameters are therefore a sign choice
// for theta_0, the floor((N-1)/2) angles theta_1..theta_M, and, for even N,
// a second sign choice for theta_{N/2}.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cog/core.hpp"

namespace cog {

/// The two admissible values of a sign-constrained phase.
enum class PhaseBranch { plus, minus };  // pi/4, 5*pi/4

double branch_angle(PhaseBranch b);

/// A phase list violated one of the canonical-form constraints.
class PhaseConstraintError : public std::runtime_error {
public:
    enum class Kind { theta0, pair_sum, half_index };

    PhaseConstraintError(Kind kind, std::size_t index, const std::string& message);
    Kind kind() const noexcept { return kind_; }
    std::size_t index() const noexcept { return index_; }

private:
    Kind kind_;
    std::size_t index_;
};

/// A full phase list theta_0..theta_{N-1}, canonical in [0, 2*pi) and
/// satisfying the constraints above within a recorded slack. Mint via
/// validate_phases or complete_phases.
class PhaseRepresentation {
public:
    const std::vector<double>& theta() const noexcept { return theta_; }
    double theta(std::size_t n) const { return theta_[n]; }
    std::size_t dim() const noexcept { return theta_.size(); }

    /// Largest measured deviation from the constraints. Zero only for
    /// exactly consistent phases; rounded interchange data carries slack,
    /// and the synthesized vector inherits it.
    double constraint_residual() const noexcept { return constraint_residual_; }

private:
    friend PhaseRepresentation validate_phases(std::vector<double> theta, double angle_tol);
    PhaseRepresentation(std::vector<double> theta, double constraint_residual)
        : theta_(std::move(theta)), constraint_residual_(constraint_residual) {}

    std::vector<double> theta_;
    double constraint_residual_ = 0.0;
};

/// The minimal free parameterization of the constraint set: a chart on
/// {pi/4, 5*pi/4} x [0, 2*pi)^floor((N-1)/2), plus the extra theta_{N/2}
/// sign forced when N is even. Indices 1..floor((N-1)/2) are the free
/// angles; their partners theta_{N-n} are derived.
struct FreePhaseParams {
    std::size_t dim = 2;                     // N
    PhaseBranch theta0_branch = PhaseBranch::plus;
    std::vector<double> free_angles;         // length floor((N-1)/2)
    std::optional<PhaseBranch> half_branch;  // present iff N even
};

/// Canonicalize each angle to [0, 2*pi) and check every constraint, within
/// angle_tol. Throws PhaseConstraintError naming the first violation
/// (theta_0 first, then pair sums in ascending n). The default tolerance
/// admits angles rounded to six decimals, the usual interchange precision.
PhaseRepresentation validate_phases(std::vector<double> theta, double angle_tol = 1e-5);

/// Fill in the derived phases: theta_{N-n} = (pi/2 - theta_n) mod 2*pi.
/// The output is violation-free at angle_tol = 1e-12.
PhaseRepresentation complete_phases(const FreePhaseParams& params);

/// Evaluate the canonical form by direct summation (ascending n). The
/// result is a cog by construction and is re-verified at 1e-9, widened to
/// four times the representation's constraint residual when the phases
/// carry slack (the output deviates in proportion to it).
CogVector synthesize(const PhaseRepresentation& rep);

}  // namespace cog
