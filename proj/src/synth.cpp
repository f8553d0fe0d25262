#include "cog/synth.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace cog {

namespace {

double branch_distance(double angle) {
    return std::min(angle_distance(angle, kQuarterPi), angle_distance(angle, kFiveQuarterPi));
}

// cos(2*pi*r/n + theta) with the quarter-turn lattice angles routed through
// exact identities, so the dyadic cancellations (the zero components of the
// N = 2 cogs, for instance) come out exact instead of rounded.
double lattice_cos(std::size_t r, std::size_t n, double theta) {
    if (r == 0) return std::cos(theta);
    if (4 * r == n) return -std::sin(theta);
    if (2 * r == n) return -std::cos(theta);
    if (4 * r == 3 * n) return std::sin(theta);
    return std::cos(kTwoPi * static_cast<double>(r) / static_cast<double>(n) + theta);
}

}  // namespace

double branch_angle(PhaseBranch b) {
    return b == PhaseBranch::plus ? kQuarterPi : kFiveQuarterPi;
}

PhaseConstraintError::PhaseConstraintError(Kind kind, std::size_t index, const std::string& message)
    : std::runtime_error(message), kind_(kind), index_(index) {}

PhaseRepresentation validate_phases(std::vector<double> theta, double angle_tol) {
    const std::size_t n = theta.size();
    if (n < 2)
        throw std::invalid_argument("validate_phases: need at least 2 phases, got " + std::to_string(n));
    if (!(angle_tol > 0.0) || angle_tol >= 1e-2)
        throw std::invalid_argument("validate_phases: angle_tol must lie in (0, 1e-2)");
    for (double t : theta)
        if (!std::isfinite(t))
            throw std::invalid_argument("validate_phases: phases must be finite");

    for (double& t : theta) t = canonical_angle(t);

    double residual = branch_distance(theta[0]);
    if (residual > angle_tol)
        throw PhaseConstraintError(PhaseConstraintError::Kind::theta0, 0,
                                   "theta_0 = " + display_number(theta[0]) +
                                       " is neither pi/4 nor 5*pi/4 (mod 2*pi)");

    for (std::size_t idx = 1; idx < n; ++idx) {
        if (2 * idx == n) {
            // pairs with itself: 2*theta = pi/2 forces theta into {pi/4, 5*pi/4}
            const double half_residual = branch_distance(theta[idx]);
            if (half_residual > angle_tol)
                throw PhaseConstraintError(PhaseConstraintError::Kind::half_index, idx,
                                           "theta_" + std::to_string(idx) + " = " +
                                               display_number(theta[idx]) +
                                               " is neither pi/4 nor 5*pi/4 (mod 2*pi)");
            residual = std::max(residual, half_residual);
            continue;
        }
        const double pair_sum = theta[idx] + theta[n - idx];
        const double pair_residual = angle_distance(pair_sum, kPi / 2.0);
        if (pair_residual > angle_tol)
            throw PhaseConstraintError(PhaseConstraintError::Kind::pair_sum, idx,
                                       "theta_" + std::to_string(idx) + " + theta_" +
                                           std::to_string(n - idx) + " = " + display_number(pair_sum) +
                                           " is not pi/2 (mod 2*pi)");
        residual = std::max(residual, pair_residual);
    }
    return PhaseRepresentation(std::move(theta), residual);
}

PhaseRepresentation complete_phases(const FreePhaseParams& params) {
    const std::size_t n = params.dim;
    if (n < 2)
        throw std::invalid_argument("complete_phases: dimension must be at least 2");
    const std::size_t m = (n - 1) / 2;
    if (params.free_angles.size() != m)
        throw std::invalid_argument("complete_phases: expected " + std::to_string(m) +
                                    " free angles for dimension " + std::to_string(n) + ", got " +
                                    std::to_string(params.free_angles.size()));
    const bool even = (n % 2 == 0);
    if (even && !params.half_branch.has_value())
        throw std::invalid_argument("complete_phases: even dimension requires a theta_{N/2} branch");
    if (!even && params.half_branch.has_value())
        throw std::invalid_argument("complete_phases: odd dimension admits no theta_{N/2} branch");
    for (double phi : params.free_angles)
        if (!std::isfinite(phi))
            throw std::invalid_argument("complete_phases: free angles must be finite");

    std::vector<double> theta(n);
    theta[0] = branch_angle(params.theta0_branch);
    for (std::size_t idx = 1; idx <= m; ++idx) {
        theta[idx] = canonical_angle(params.free_angles[idx - 1]);
        theta[n - idx] = canonical_angle(kPi / 2.0 - theta[idx]);
    }
    if (even) theta[n / 2] = branch_angle(*params.half_branch);

    return validate_phases(std::move(theta), 1e-12);
}

CogVector synthesize(const PhaseRepresentation& rep) {
    const std::size_t n = rep.dim();
    const auto& theta = rep.theta();
    const double scale = std::numbers::sqrt2 / static_cast<double>(n);
    std::vector<double> a(n);
    for (std::size_t k = 0; k < n; ++k) {  // 1-based index k+1
        double sum = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            sum += lattice_cos((m * k) % n, n, theta[m]);
        }
        a[k] = scale * sum;
    }
    return CogVector(RealVector(std::move(a)), std::max(1e-9, 4.0 * rep.constraint_residual()));
}

}  // namespace cog
