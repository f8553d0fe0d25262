#include "cog/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <utility>

namespace cog {

namespace {

bool all_finite(const std::vector<double>& xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2 Cooley-Tukey, in place. a.size() must be a power of two.
// sign = -1 forward, +1 inverse (no 1/n scaling).
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<std::complex<double>> twiddle;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        twiddle.resize(half);
        for (std::size_t k = 0; k < half; ++k)
            twiddle[k] = std::polar(1.0, sign * kTwoPi * static_cast<double>(k) / static_cast<double>(len));
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const auto u = a[i + k];
                const auto t = twiddle[k] * a[i + k + half];
                a[i + k] = u + t;
                a[i + k + half] = u - t;
            }
        }
    }
}

// Bluestein's chirp-z reduction: an N-point DFT of any length as a
// power-of-two circular convolution. The chirp exponent uses k^2 mod 2N so
// the trig arguments stay small.
std::vector<std::complex<double>> fft_bluestein(const std::vector<std::complex<double>>& x, int sign) {
    const std::size_t n = x.size();
    const auto two_n = static_cast<std::uint64_t>(2 * n);
    auto chirp = [&](std::size_t k) {
        const auto r = (static_cast<std::uint64_t>(k) * k) % two_n;
        return std::polar(1.0, sign * kPi * static_cast<double>(r) / static_cast<double>(n));
    };

    const std::size_t m = next_power_of_two(2 * n - 1);
    std::vector<std::complex<double>> a(m), b(m);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = x[k] * chirp(k);
        b[k] = std::conj(chirp(k));
        if (k != 0) b[m - k] = b[k];
    }

    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, +1);

    std::vector<std::complex<double>> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) out[k] = chirp(k) * a[k] * scale;
    return out;
}

std::vector<std::complex<double>> transform_fast(std::vector<std::complex<double>> x, int sign) {
    if (is_power_of_two(x.size())) {
        fft_pow2(x, sign);
        return x;
    }
    return fft_bluestein(x, sign);
}

}  // namespace

RealVector::RealVector(std::vector<double> components) : components_(std::move(components)) {
    if (components_.size() < 2)
        throw std::invalid_argument("RealVector: dimension must be at least 2, got " +
                                    std::to_string(components_.size()));
    if (!all_finite(components_))
        throw std::invalid_argument("RealVector: all components must be finite");
}

CogVector::CogVector(RealVector v, double tolerance) : vector_(std::move(v)), tolerance_(tolerance) {
    if (!(tolerance_ > 0.0))
        throw std::invalid_argument("CogVector: tolerance must be positive");
    for (std::size_t s = 0; s < vector_.dim(); ++s) {
        const double target = (s == 0) ? 1.0 : 0.0;
        const double residual = std::abs(cyclic_autocorrelation(vector_, s) - target);
        if (residual > tolerance_)
            throw InvariantViolation("CogVector: autocorrelation residual " + std::to_string(residual) +
                                     " at shift " + std::to_string(s) + " exceeds tolerance");
    }
    if (std::abs(std::abs(component_sum(vector_)) - 1.0) > tolerance_)
        throw InvariantViolation("CogVector: component sum is not within tolerance of +-1");
}

Tolerance::Tolerance(double abs, double angle) : abs_tol(abs), angle_tol(angle) {
    if (!(abs > 0.0) || !(abs < 1e-2))
        throw std::invalid_argument("Tolerance: abs_tol must lie in (0, 1e-2)");
    if (!(angle > 0.0) || !(angle < 1e-2))
        throw std::invalid_argument("Tolerance: angle_tol must lie in (0, 1e-2)");
}

std::size_t star_index(std::int64_t n, std::size_t dim) {
    if (dim < 2)
        throw std::invalid_argument("star_index: dimension must be at least 2");
    const auto N = static_cast<std::int64_t>(dim);
    std::int64_t r = n % N;
    if (r <= 0) r += N;
    return static_cast<std::size_t>(r);
}

RealVector cycle(const RealVector& v) {
    std::vector<double> out(v.components().begin() + 1, v.components().end());
    out.push_back(v[0]);
    return RealVector(std::move(out));
}

double cyclic_autocorrelation(const RealVector& v, std::size_t shift) {
    const std::size_t n = v.dim();
    if (shift >= n)
        throw std::out_of_range("cyclic_autocorrelation: shift " + std::to_string(shift) +
                                " must lie in {0,...," + std::to_string(n - 1) + "}");
    double sum = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
        sum += v[j - 1] * v[star_index(static_cast<std::int64_t>(j + shift), n) - 1];
    return sum;
}

double component_sum(const RealVector& v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

ComplexSpectrum dft(const RealVector& v, DftPath path) {
    const std::size_t n = v.dim();
    ComplexSpectrum out;
    out.bins.resize(n);
    if (path == DftPath::direct) {
        for (std::size_t bin = 0; bin < n; ++bin) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t r = (bin * j) % n;  // exact, keeps the angle in [0, 2*pi)
                acc += v[j] * std::polar(1.0, -kTwoPi * static_cast<double>(r) / static_cast<double>(n));
            }
            out.bins[bin] = acc;
        }
        return out;
    }
    std::vector<std::complex<double>> x(v.begin(), v.end());
    out.bins = transform_fast(std::move(x), -1);
    return out;
}

RealVector idft_real(const ComplexSpectrum& spectrum, DftPath path) {
    const std::size_t n = spectrum.size();
    if (n < 2)
        throw std::invalid_argument("idft_real: spectrum must have at least 2 bins");

    std::vector<std::complex<double>> time(n);
    if (path == DftPath::direct) {
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t bin = 0; bin < n; ++bin) {
                const std::size_t r = (bin * j) % n;
                acc += spectrum[bin] * std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(n));
            }
            time[j] = acc;
        }
    } else {
        time = transform_fast(spectrum.bins, +1);
    }

    double scale_ref = 0.0;
    for (const auto& z : spectrum.bins) scale_ref = std::max(scale_ref, std::abs(z));
    scale_ref = std::max(scale_ref, 1.0);

    std::vector<double> out(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(time[j].imag()) * inv_n > 1e-6 * scale_ref)
            throw std::invalid_argument("idft_real: spectrum is not conjugate-symmetric");
        out[j] = time[j].real() * inv_n;
    }
    return RealVector(std::move(out));
}

TrigSums cyclic_trig_sums(std::size_t dim, std::int64_t a, double theta) {
    if (dim < 2)
        throw std::invalid_argument("cyclic_trig_sums: dimension must be at least 2");
    if (a == 0)
        throw std::invalid_argument("cyclic_trig_sums: a must be a nonzero integer");
    if (a % static_cast<std::int64_t>(dim) == 0) {
        const auto n = static_cast<double>(dim);
        return {n * std::cos(theta), n * std::sin(theta)};
    }
    return {0.0, 0.0};
}

double canonical_angle(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod noise can land exactly on 2*pi
    return r;
}

double angle_distance(double a, double b) {
    const double d = canonical_angle(a - b);
    return std::min(d, kTwoPi - d);
}

std::string display_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace cog
