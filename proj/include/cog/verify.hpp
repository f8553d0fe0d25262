// verify.hpp - decide whether a vector is a cog.
//
// Two equivalent criteria are implemented:
//
//   direct:   every cyclic autocorrelation residual |rho(s) - delta_0^s|
//             is at most abs_tol. O(N^2). This is the defining condition.
//   spectral: every DFT bin has modulus 1 within abs_tol. O(N log N).
//             Equivalent because |a_hat_n|^2 is the Fourier transform of
//             the autocorrelation sequence.
//
// Near the tolerance threshold the two may disagree (the deviation measures
// differ by a bounded factor); the direct verdict is authoritative. Inputs
// whose max deviation lies outside [abs_tol/2, 2*abs_tol] always agree.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cog/core.hpp"

namespace cog {

enum class VerifyMethod { direct, spectral, gram };

struct VerificationReport {
    bool is_cog = false;
    VerifyMethod method = VerifyMethod::direct;
    std::vector<double> per_shift_residuals;  // |rho(s) - delta_0^s|, direct and gram methods
    std::vector<double> per_bin_moduli;       // |a_hat_n|, spectral method
    double component_sum = 0.0;
    double max_deviation = 0.0;  // max residual, or max |1 - |a_hat_n||
    Tolerance tolerance_used;
};

/// Verification failed on user input. Carries the diagnostic report.
class NotACogError : public std::runtime_error {
public:
    NotACogError(const std::string& message, VerificationReport report);
    const VerificationReport& report() const noexcept { return report_; }

private:
    VerificationReport report_;
};

/// Dense N x N matrix, row-major.
struct SquareMatrix {
    std::size_t dim = 0;
    std::vector<double> entries;

    double at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

/// The defining autocorrelation condition, checked shift by shift.
VerificationReport is_cog_direct(const RealVector& v, const Tolerance& tol = {});

/// The unit-modulus spectrum criterion, via the fast transform.
VerificationReport is_cog_spectral(const RealVector& v, const Tolerance& tol = {});

/// Diagnostic: verdict from the full Gram matrix (max |G - I| entry).
VerificationReport is_cog_gram(const RealVector& v, const Tolerance& tol = {});

/// Gram matrix of the cyclic shifts: entry (r,c) = <cycle^r(v), cycle^c(v)>.
/// Symmetric and circulant; the identity iff v is a cog. Materialized
/// densely, so dim is capped at 4096.
SquareMatrix gram_matrix(const RealVector& v);

/// Run direct verification and mint a CogVector, or throw NotACogError.
CogVector verify_cog(const RealVector& v, const Tolerance& tol = {});

/// Sign of sum a_j, which is +-1 for every cog.
/// Throws InvariantViolation if |sum| strays from 1 beyond the vector's
/// stated tolerance.
int component_sum_sign(const CogVector& v);

}  // namespace cog
