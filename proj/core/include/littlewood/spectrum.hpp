#pragma once

// Evaluation of integer-coefficient polynomials at roots of unity.
// Backed by FFTW; planning is serialised internally, execution is
// per-call, so these functions may be called from several threads.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace littlewood {

using Complex = std::complex<double>;

/// A(zeta_m^k) for k = 0..m-1, with zeta_m = exp(2 pi i / m). Coefficients
/// beyond index m-1 are folded mod m (z^m = 1 on those points).
std::vector<Complex> evaluate_on_roots(std::span<const std::int8_t> coeffs, std::size_t m);

/// |A(zeta_m^k)|^2 for k = 0..floor(m/2) (the remaining half mirrors it for
/// real coefficients). Uses a real-to-complex transform.
std::vector<double> half_power_spectrum(std::span<const std::int8_t> coeffs, std::size_t m);

/// Linear (aperiodic) autocorrelation sum_j a_j a_{j+u}, u = 0..n-1, through
/// a zero-padded power-of-two FFT. Values are unrounded.
std::vector<double> fft_autocorrelation(std::span<const std::int8_t> coeffs);

/// Direct O(n m) evaluation, used as a reference for small sizes.
std::vector<Complex> evaluate_on_roots_direct(std::span<const std::int8_t> coeffs,
                                              std::size_t m);

/// exp(2 pi i k / m), with k reduced mod m first.
Complex root_of_unity(std::int64_t k, std::int64_t m);

}  // namespace littlewood
