#include "cog/extract.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace cog {

CircleCoords circle_coords(const CogVector& v, std::size_t n) {
    const RealVector& a = v.vector();
    const std::size_t dim = a.dim();
    if (n >= dim)
        throw std::out_of_range("circle_coords: index " + std::to_string(n) + " must lie in {0,...," +
                                std::to_string(dim - 1) + "}");
    double c = 0.0, s = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {  // 1-based index j+1
        const std::size_t r = (n * j) % dim;
        const double angle = kQuarterPi - kTwoPi * static_cast<double>(r) / static_cast<double>(dim);
        c += a[j] * std::cos(angle);
        s += a[j] * std::sin(angle);
    }
    return {c, s};
}

ExtractionResult extract_phases(const CogVector& v) {
    const std::size_t dim = v.dim();
    std::vector<double> theta(dim);
    std::vector<double> residuals(dim);
    std::vector<double> moduli(dim);
    double worst = 0.0;
    std::size_t worst_bin = 0;
    for (std::size_t n = 0; n < dim; ++n) {
        const auto [c, s] = circle_coords(v, n);
        moduli[n] = std::hypot(c, s);
        residuals[n] = std::abs(c * c + s * s - 1.0);
        if (residuals[n] > worst) {
            worst = residuals[n];
            worst_bin = n;
        }
        // atan2 is scale-invariant, so small radial noise does not bend the angle
        theta[n] = canonical_angle(std::atan2(s, c));
    }
    if (worst > v.tolerance()) {
        VerificationReport report;
        report.method = VerifyMethod::spectral;
        report.tolerance_used = Tolerance(v.tolerance(), v.tolerance());
        report.component_sum = component_sum(v.vector());
        report.per_bin_moduli = std::move(moduli);
        report.max_deviation = worst;
        throw NotACogError("extract_phases: (C_n, S_n) at n = " + std::to_string(worst_bin) +
                               " is off the unit circle by " + display_number(worst),
                           std::move(report));
    }

    PhaseRepresentation rep = [&] {
        try {
            return validate_phases(std::move(theta), std::max(v.tolerance(), 1e-12));
        } catch (const PhaseConstraintError& e) {
            // guaranteed to hold for any verified cog
            throw InvariantViolation(std::string("extract_phases: extracted phases violate the "
                                                 "canonical-form constraints: ") +
                                     e.what());
        }
    }();

    const CogVector reconstructed = synthesize(rep);
    double recon = 0.0;
    for (std::size_t j = 0; j < dim; ++j)
        recon = std::max(recon, std::abs(v.vector()[j] - reconstructed.vector()[j]));
    if (recon > 10.0 * v.tolerance())
        throw InvariantViolation("extract_phases: reconstruction residual " + display_number(recon) +
                                 " exceeds 10x tolerance");

    return {std::move(rep), std::move(residuals), recon};
}

ExtractionResult canonical_form(const RealVector& v, const Tolerance& tol) {
    VerificationReport report = is_cog_direct(v, tol);
    if (!report.is_cog)
        throw NotACogError("not a cog: max autocorrelation residual " +
                               display_number(report.max_deviation) + " exceeds tolerance " +
                               display_number(tol.abs_tol),
                           std::move(report));
    return extract_phases(CogVector(v, tol.abs_tol));
}

}  // namespace cog
