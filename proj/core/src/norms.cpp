#include "littlewood/norms.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "littlewood/spectrum.hpp"

namespace littlewood {

std::string to_string(int128_t v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  uint128_t u = negative ? -static_cast<uint128_t>(v)
                                 : static_cast<uint128_t>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

AutocorrelationProfile autocorrelation_direct(const TernarySequence& a) {
  const auto n = a.size();
  auto x = a.coeffs();
  AutocorrelationProfile p{std::vector<std::int64_t>(n, 0)};
  for (std::size_t u = 0; u < n; ++u) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j + u < n; ++j) acc += x[j] * x[j + u];
    p.c[u] = acc;
  }
  return p;
}

std::optional<AutocorrelationProfile> autocorrelation_fft(const TernarySequence& a,
                                                          double* max_residual) {
  const auto raw = fft_autocorrelation(a.coeffs());
  AutocorrelationProfile p{std::vector<std::int64_t>(raw.size())};
  double worst = 0.0;
  for (std::size_t u = 0; u < raw.size(); ++u) {
    const double rounded = std::nearbyint(raw[u]);
    worst = std::max(worst, std::abs(raw[u] - rounded));
    p.c[u] = static_cast<std::int64_t>(rounded);
  }
  if (max_residual != nullptr) *max_residual = worst;
  if (!(worst < kFftRoundingGuard)) return std::nullopt;
  return p;
}

AutocorrelationProfile autocorrelation(const TernarySequence& a) {
  if (a.n() < kDirectAutocorrelationLimit) return autocorrelation_direct(a);
  double residual = 0.0;
  if (auto p = autocorrelation_fft(a, &residual)) return *std::move(p);
  std::cerr << "warning: FFT autocorrelation rounding guard tripped (residual " << residual
            << ", n=" << a.n() << "); using the direct route\n";
  return autocorrelation_direct(a);
}

int128_t l4_fourth_power(const AutocorrelationProfile& profile) {
  if (profile.c.empty()) return 0;
  int128_t tail = 0;
  for (std::size_t u = 1; u < profile.c.size(); ++u) {
    tail += static_cast<int128_t>(profile.c[u]) * profile.c[u];
  }
  const int128_t c0 = profile.c[0];
  return c0 * c0 + 2 * tail;
}

int128_t l4_fourth_power_exact(const TernarySequence& a) {
  return l4_fourth_power(autocorrelation(a));
}

double l4_fourth_power_dft(const TernarySequence& a) {
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  // Even-indexed points of the 2n-th roots are the n-th roots, odd-indexed
  // ones are their negatives, so one transform of length 2n covers both sums.
  const std::size_t m = 2 * n;
  const auto power = half_power_spectrum(a.coeffs(), m);
  long double sum = 0.0L;
  for (std::size_t k = 0; k < power.size(); ++k) {
    const long double p2 = static_cast<long double>(power[k]) * power[k];
    const bool self_mirrored = k == 0 || 2 * k == m;
    sum += self_mirrored ? p2 : 2.0L * p2;
  }
  return static_cast<double>(sum / static_cast<long double>(m));
}

std::optional<double> merit_factor(std::int64_t l2sq, int128_t l4p4) noexcept {
  const int128_t l2p4 = static_cast<int128_t>(l2sq) * l2sq;
  const int128_t denom = l4p4 - l2p4;
  if (denom == 0) return std::nullopt;
  return static_cast<double>(l2p4) / static_cast<double>(denom);
}

std::optional<double> merit_factor(const TernarySequence& a) {
  return merit_factor(l2_squared(a), l4_fourth_power_exact(a));
}

Rational reduce_rotation(const Rational& r) {
  // k = ceil((2p - q) / 2q) puts r - k in (-1/2, 1/2].
  const int128_t a = 2 * static_cast<int128_t>(r.num) - r.den;
  const int128_t b = 2 * static_cast<int128_t>(r.den);
  int128_t k = a / b;
  if (a % b != 0 && a > 0) ++k;
  return Rational(static_cast<std::int64_t>(r.num - k * r.den), r.den);
}

double asymptotic_f(const Rational& r) {
  const Rational reduced = reduce_rotation(r);
  // |r| - 1/4 = (4|p| - q) / 4q
  const double x = static_cast<double>(4 * std::abs(reduced.num) - reduced.den) /
                   (4.0 * static_cast<double>(reduced.den));
  return 1.0 / (1.0 / 6.0 + 8.0 * x * x);
}

double asymptotic_f(double r) {
  double reduced = r - std::ceil(r - 0.5);
  if (reduced <= -0.5) reduced += 1.0;
  const double x = std::abs(reduced) - 0.25;
  return 1.0 / (1.0 / 6.0 + 8.0 * x * x);
}

double MeritReport::dft_relative_error() const noexcept {
  const double exact = static_cast<double>(l4p4_exact);
  if (exact == 0.0) return std::abs(l4p4_dft);
  return std::abs(exact - l4p4_dft) / exact;
}

MeritReport measure(const TernarySequence& rotated, const Rational& r, std::string label,
                    std::optional<std::uint64_t> seed) {
  MeritReport rep;
  rep.n = rotated.n();
  rep.r = r;
  rep.completion_label = std::move(label);
  rep.seed = seed;
  rep.l2sq = l2_squared(rotated);
  rep.l4p4_exact = l4_fourth_power_exact(rotated);
  rep.l4p4_dft = l4_fourth_power_dft(rotated);
  rep.merit = merit_factor(rep.l2sq, rep.l4p4_exact);
  rep.f_of_r = asymptotic_f(r);
  return rep;
}

}  // namespace littlewood
