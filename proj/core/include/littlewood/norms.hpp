#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/sequences.hpp"

namespace littlewood {

/// Decimal rendering of a 128-bit integer.
std::string to_string(int128_t v);

/// Exact aperiodic autocorrelations c_u = sum_j a_j a_{j+u}, u = 0..n-1.
struct AutocorrelationProfile {
  std::vector<std::int64_t> c;

  std::int64_t n() const noexcept { return static_cast<std::int64_t>(c.size()); }
  friend bool operator==(const AutocorrelationProfile&, const AutocorrelationProfile&) = default;
};

/// O(n^2) reference.
AutocorrelationProfile autocorrelation_direct(const TernarySequence& a);

/// Rounding guard for the FFT path: every unrounded value must lie within
/// this distance of an integer.
inline constexpr double kFftRoundingGuard = 1e-3;

/// FFT route, rounded to the nearest integer. Returns nullopt when some
/// value is further than kFftRoundingGuard from an integer. The largest
/// pre-rounding residual is written to *max_residual when given.
std::optional<AutocorrelationProfile> autocorrelation_fft(const TernarySequence& a,
                                                          double* max_residual = nullptr);

/// Below this length the direct route is used.
inline constexpr std::int64_t kDirectAutocorrelationLimit = 512;

/// Picks the direct route for short sequences and the FFT route otherwise,
/// falling back to direct if the rounding guard trips.
AutocorrelationProfile autocorrelation(const TernarySequence& a);

/// c_0^2 + 2 sum_{u>=1} c_u^2, accumulated in 128 bits (the sum reaches
/// 2^63 once n exceeds about 2^21).
int128_t l4_fourth_power(const AutocorrelationProfile& profile);

/// ||A||_4^4 as an exact integer. Ground truth for every other route.
int128_t l4_fourth_power_exact(const TernarySequence& a);

/// ||A||_4^4 from the values at the 2n-th roots of unity:
/// (1/2n) (sum_j |A(zeta_n^j)|^4 + sum_j |A(-zeta_n^j)|^4).
double l4_fourth_power_dft(const TernarySequence& a);

/// ||A||_2^2, the count of nonzero coefficients.
inline std::int64_t l2_squared(const TernarySequence& a) noexcept { return a.weight(); }

/// F = l2sq^2 / (l4p4 - l2sq^2). nullopt signals a zero denominator.
std::optional<double> merit_factor(std::int64_t l2sq, int128_t l4p4) noexcept;
std::optional<double> merit_factor(const TernarySequence& a);

/// Reduces r into (-1/2, 1/2] by an integer shift.
Rational reduce_rotation(const Rational& r);

/// 1 / (1/6 + 8 (|r| - 1/4)^2) on (-1/2, 1/2], extended with period 1.
double asymptotic_f(const Rational& r);
double asymptotic_f(double r);

struct MeritReport {
  std::int64_t n = 0;
  Rational r;
  std::string completion_label;
  std::optional<std::uint64_t> seed;
  std::int64_t l2sq = 0;
  int128_t l4p4_exact = 0;
  double l4p4_dft = 0.0;
  std::optional<double> merit;
  double f_of_r = 0.0;
  /// |1/F - (phi/n)^2 / F(J_r)|, filled in where F(J_r) is known.
  std::optional<double> gap;

  /// |l4p4_exact - l4p4_dft| / l4p4_exact.
  double dft_relative_error() const noexcept;
};

/// Measures an already-rotated sequence.
MeritReport measure(const TernarySequence& rotated, const Rational& r, std::string label,
                    std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace littlewood
