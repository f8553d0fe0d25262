// core.hpp - foundational types and operations for cyclic orthonormal
// generators (cogs) in R^N.
//
// A cog is a vector whose N cyclic shifts form an orthonormal basis of R^N.
// Equivalently, its cyclic autocorrelation is the Kronecker delta:
//
//   sum_{j=1..N} a_j a_{(j+s)*} = delta_0^s   for every s in {0,...,N-1},
//
// where (n)* is the representative of n mod N lying in {1,...,N}.
//
// This header provides the index arithmetic, the cyclic shift, the
// autocorrelation sum, the discrete Fourier transform (direct and fast
// paths), and the closed-form cyclic trig sums used throughout the library.
//
// Index convention: the math above is 1-based; storage is 0-based.
// star_index is the single translation point between the two.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cog {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;
inline constexpr double kFiveQuarterPi = 5.0 * std::numbers::pi / 4.0;

/// Thrown when a value that is mathematically guaranteed by construction
/// fails its check anyway. Reaching this is a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An N-component real vector (a_1,...,a_N), N >= 2, all components finite.
class RealVector {
public:
    explicit RealVector(std::vector<double> components);

    std::size_t dim() const noexcept { return components_.size(); }
    double operator[](std::size_t i) const { return components_[i]; }  // 0-based
    const std::vector<double>& components() const noexcept { return components_; }

    auto begin() const noexcept { return components_.begin(); }
    auto end() const noexcept { return components_.end(); }

    bool operator==(const RealVector&) const = default;

private:
    std::vector<double> components_;
};

/// A RealVector that has passed cog verification at a stated tolerance.
///
/// The constructor re-checks the defining condition; it throws
/// InvariantViolation on failure since every sanctioned construction path
/// (verify_cog, synthesize, nearest_cog) guarantees it mathematically.
class CogVector {
public:
    CogVector(RealVector v, double tolerance);

    const RealVector& vector() const noexcept { return vector_; }
    double tolerance() const noexcept { return tolerance_; }
    std::size_t dim() const noexcept { return vector_.dim(); }

private:
    RealVector vector_;
    double tolerance_;
};

/// Numeric tolerances. Both must be strictly positive and below 1e-2.
struct Tolerance {
    Tolerance() = default;
    Tolerance(double abs, double angle);

    double abs_tol = 1e-9;
    double angle_tol = 1e-9;  // radians
};

/// DFT bins: bins[n] = sum_{j=1..N} a_j exp(-2*pi*i * n * (j-1) / N).
///
/// For real input the bins are conjugate-symmetric (bins[N-n] = conj(bins[n]))
/// and bins[0] is real up to rounding.
struct ComplexSpectrum {
    std::vector<std::complex<double>> bins;

    std::size_t size() const noexcept { return bins.size(); }
    std::complex<double>& operator[](std::size_t n) { return bins[n]; }
    const std::complex<double>& operator[](std::size_t n) const { return bins[n]; }
};

/// (n)*: the unique element of {1,...,N} congruent to n mod N.
/// n may be any integer, including negatives. Throws std::invalid_argument
/// if dim < 2.
std::size_t star_index(std::int64_t n, std::size_t dim);

/// The cycle of (a_1,...,a_N): the vector (a_2,...,a_N,a_1).
/// Applying it N times returns the input bit-identically.
RealVector cycle(const RealVector& v);

/// sum_{j=1..N} a_j a_{(j+s)*}, summed in ascending j order.
/// Equals delta_0^s exactly when v is a cog. Throws std::out_of_range for
/// shift >= N.
double cyclic_autocorrelation(const RealVector& v, std::size_t shift);

/// sum a_j in ascending index order. For a cog this is +-1.
double component_sum(const RealVector& v);

/// Which evaluation path the transforms use. The direct path is the
/// O(N^2) oracle; the fast path is O(N log N) (radix-2 for powers of two,
/// Bluestein otherwise) and agrees with it to better than 1e-12 relative
/// for N <= 1024.
enum class DftPath { direct, fast };

ComplexSpectrum dft(const RealVector& v, DftPath path = DftPath::fast);

/// Inverse transform of a conjugate-symmetric spectrum back to a real
/// vector: a_j = (1/N) sum_n bins[n] exp(+2*pi*i * n * (j-1) / N).
/// Throws std::invalid_argument if the spectrum is visibly asymmetric
/// (imaginary residue above 1e-6 relative).
RealVector idft_real(const ComplexSpectrum& spectrum, DftPath path = DftPath::fast);

struct TrigSums {
    double cos_sum;
    double sin_sum;
};

/// Closed form of the cyclic trig sums
///
///   sum_{n=0..N-1} cos(2*pi*n*a/N + theta) = N cos(theta) if N | a, else 0
///   sum_{n=0..N-1} sin(2*pi*n*a/N + theta) = N sin(theta) if N | a, else 0
///
/// for a nonzero integer a. Throws std::invalid_argument when a == 0.
TrigSums cyclic_trig_sums(std::size_t dim, std::int64_t a, double theta);

/// Reduce an angle to [0, 2*pi).
double canonical_angle(double x);

/// Distance between two angles on the circle, in [0, pi].
double angle_distance(double a, double b);

/// %.6g rendering for diagnostics (std::to_string prints fixed-point only,
/// which flattens small residuals and tolerances to 0.000000).
std::string display_number(double x);

}  // namespace cog
