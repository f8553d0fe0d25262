#include "cog/verify.hpp"

#include <cmath>
#include <utility>

namespace cog {

NotACogError::NotACogError(const std::string& message, VerificationReport report)
    : std::runtime_error(message), report_(std::move(report)) {}

VerificationReport is_cog_direct(const RealVector& v, const Tolerance& tol) {
    const std::size_t n = v.dim();
    VerificationReport report;
    report.method = VerifyMethod::direct;
    report.tolerance_used = tol;
    report.component_sum = component_sum(v);
    report.per_shift_residuals.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        const double target = (s == 0) ? 1.0 : 0.0;
        const double residual = std::abs(cyclic_autocorrelation(v, s) - target);
        report.per_shift_residuals[s] = residual;
        report.max_deviation = std::max(report.max_deviation, residual);
    }
    report.is_cog = report.max_deviation <= tol.abs_tol;
    return report;
}

VerificationReport is_cog_spectral(const RealVector& v, const Tolerance& tol) {
    VerificationReport report;
    report.method = VerifyMethod::spectral;
    report.tolerance_used = tol;
    report.component_sum = component_sum(v);
    const ComplexSpectrum spectrum = dft(v, DftPath::fast);
    report.per_bin_moduli.resize(spectrum.size());
    for (std::size_t n = 0; n < spectrum.size(); ++n) {
        const double modulus = std::abs(spectrum[n]);
        report.per_bin_moduli[n] = modulus;
        report.max_deviation = std::max(report.max_deviation, std::abs(1.0 - modulus));
    }
    report.is_cog = report.max_deviation <= tol.abs_tol;
    return report;
}

SquareMatrix gram_matrix(const RealVector& v) {
    const std::size_t n = v.dim();
    if (n > 4096)
        throw std::length_error("gram_matrix: dense Gram matrix is capped at dimension 4096");
    SquareMatrix g;
    g.dim = n;
    g.entries.resize(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            // <cycle^r(v), cycle^c(v)> summed in ascending index order; the
            // same products in the same order make the matrix exactly
            // symmetric, so the mirror entry is copied.
            double dot = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                dot += v[(j + r) % n] * v[(j + c) % n];
            g.entries[r * n + c] = dot;
            g.entries[c * n + r] = dot;
        }
    }
    return g;
}

VerificationReport is_cog_gram(const RealVector& v, const Tolerance& tol) {
    const SquareMatrix g = gram_matrix(v);
    const std::size_t n = g.dim;
    VerificationReport report;
    report.method = VerifyMethod::gram;
    report.tolerance_used = tol;
    report.component_sum = component_sum(v);
    report.per_shift_residuals.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const double target = (r == c) ? 1.0 : 0.0;
            const double deviation = std::abs(g.at(r, c) - target);
            report.max_deviation = std::max(report.max_deviation, deviation);
            if (r == 0) report.per_shift_residuals[c] = deviation;
        }
    }
    report.is_cog = report.max_deviation <= tol.abs_tol;
    return report;
}

CogVector verify_cog(const RealVector& v, const Tolerance& tol) {
    VerificationReport report = is_cog_direct(v, tol);
    if (!report.is_cog)
        throw NotACogError("not a cog: max autocorrelation residual " +
                               display_number(report.max_deviation) + " exceeds tolerance " +
                               display_number(tol.abs_tol),
                           std::move(report));
    return CogVector(v, tol.abs_tol);
}

int component_sum_sign(const CogVector& v) {
    const double sum = component_sum(v.vector());
    if (std::abs(std::abs(sum) - 1.0) > v.tolerance())
        throw InvariantViolation("component_sum_sign: corrupted cog, |sum a_j| = " +
                                 display_number(std::abs(sum)) + " is not within tolerance of 1");
    return sum > 0.0 ? +1 : -1;
}

}  // namespace cog
