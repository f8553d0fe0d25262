// extract.hpp - recover the canonical phase representation of a cog.
//
// For a cog (a_1,...,a_N) the quantities
//
//   C_n = sum_{j=1..N} a_j cos(pi/4 - 2*pi*n*(j-1)/N)
//   S_n = sum_{j=1..N} a_j sin(pi/4 - 2*pi*n*(j-1)/N)
//
// lie on the unit circle for every n, and theta_n = atan2(S_n, C_n) is the
// unique (mod 2*pi) phase list whose canonical form reproduces the vector.
// C_n + i*S_n equals exp(i*pi/4) times the n-th DFT bin.

#pragma once

#include <cstddef>
#include <vector>

#include "cog/core.hpp"
#include "cog/synth.hpp"
#include "cog/verify.hpp"

namespace cog {

struct CircleCoords {
    double c;  // C_n
    double s;  // S_n
};

struct ExtractionResult {
    PhaseRepresentation representation;
    std::vector<double> unit_circle_residuals;  // |C_n^2 + S_n^2 - 1|
    double reconstruction_residual;             // max-norm gap to the re-synthesized vector
};

/// (C_n, S_n) by direct summation. Throws std::out_of_range for n >= N.
CircleCoords circle_coords(const CogVector& v, std::size_t n);

/// Full phase recovery. The angles always satisfy the canonical-form
/// constraints; the reconstruction residual stays within 10x the vector's
/// tolerance. Throws NotACogError if some (C_n, S_n) strays off the unit
/// circle beyond the vector's tolerance.
ExtractionResult extract_phases(const CogVector& v);

/// Verify-then-extract pipeline for arbitrary input. Throws NotACogError
/// (carrying the direct verification report) when v is not a cog.
ExtractionResult canonical_form(const RealVector& v, const Tolerance& tol = {});

}  // namespace cog
