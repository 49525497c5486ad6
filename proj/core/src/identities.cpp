#include "littlewood/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace littlewood {

ComplexPair ramanujan_sum_check(std::int64_t u, const FactoredModulus& m) {
  const std::int64_t n = m.n();
  Complex direct{0.0, 0.0};
  for (std::int64_t j = 0; j < n; ++j) {
    if (gcd(j, n) == 1) direct += root_of_unity(mod_floor(j * mod_floor(u, n), n), n);
  }
  return {Complex(static_cast<double>(ramanujan_sum(u, m)), 0.0), direct};
}

ComplexPair gauss_sum_check(std::int64_t j, const FactoredModulus& m, JacobiFn symbol) {
  const std::int64_t n = m.n();
  Complex direct{0.0, 0.0};
  const std::int64_t jr = mod_floor(j, n);
  for (std::int64_t l = 0; l < n; ++l) {
    const int s = symbol(l, n);
    if (s != 0) direct += static_cast<double>(s) * root_of_unity(jr * l % n, n);
  }
  const Complex closed = i_power(gauss_sum_i_exponent(n)) *
                         (static_cast<double>(symbol(j, n)) * std::sqrt(static_cast<double>(n)));
  return {closed, direct};
}

IntegerPair character_sum_check(std::int64_t u, const FactoredModulus& m, JacobiFn symbol) {
  const std::int64_t n = m.n();
  std::int64_t lhs = 0;
  for (std::int64_t j = 0; j < n; ++j) lhs += symbol(j, n) * symbol(j + u, n);
  return {lhs, ramanujan_sum(u, m)};
}

ExpSumCheck exp_sum_identity_check(std::int64_t j, std::int64_t n) {
  if (n < 2 || std::abs(j) > n) {
    throw std::invalid_argument("exp_sum_identity_check needs n >= 2 and |j| <= n, got j=" +
                                std::to_string(j) + ", n=" + std::to_string(n));
  }
  Complex lhs{0.0, 0.0};
  for (std::int64_t k = 1; k < n; ++k) {
    lhs += root_of_unity(mod_floor(j * k, n), n) / std::norm(1.0 - root_of_unity(k, n));
  }
  const double nd = static_cast<double>(n);
  const double t = static_cast<double>(std::abs(j)) / nd - 0.5;
  const double rhs = nd * nd / 2.0 * t * t - (nd * nd + 2.0) / 24.0;
  return {lhs.real(), rhs, std::abs(lhs.imag())};
}

std::vector<Complex> spectral_values_J(const FactoredModulus& m, const Rotation& rot) {
  const std::int64_t n = m.n();
  const std::int64_t shift = rot.shift(n);
  const Complex unit = i_power(gauss_sum_i_exponent(n));
  const double root_n = std::sqrt(static_cast<double>(n));
  std::vector<Complex> out(n);
  for (std::int64_t j = 0; j < n; ++j) {
    const int s = jacobi(j, n);
    if (s == 0) continue;
    const std::int64_t e = mod_floor(-mod_floor(j, n) * mod_floor(shift, n) % n, n);
    out[j] = unit * root_of_unity(e, n) * (static_cast<double>(s) * root_n);
  }
  return out;
}

double circle_grid_max(const TernarySequence& a) {
  const auto grid = evaluate_on_roots(a.coeffs(), 8 * a.size());
  double best = 0.0;
  for (const auto& v : grid) best = std::max(best, std::abs(v));
  return best;
}

InterpolationCheck interpolation_bound_check(const TernarySequence& a) {
  const std::int64_t n = a.n();
  if (n <= 2) {
    throw std::invalid_argument("interpolation bound needs n > 2, got n=" + std::to_string(n));
  }
  const auto at_roots = evaluate_on_roots(a.coeffs(), a.size());
  double root_max = 0.0;
  for (const auto& v : at_roots) root_max = std::max(root_max, std::abs(v));
  return {circle_grid_max(a), 2.0 * std::log(static_cast<double>(n)) * root_max};
}

double character_circle_bound(std::int64_t n) {
  const double nd = static_cast<double>(n);
  return 2.0 * std::sqrt(nd) * std::log(nd);
}

Prop4Bound::Prop4Bound(const FactoredModulus& m)
    : n_sq_(static_cast<int128_t>(m.n()) * m.n()),
      phi_sq_(static_cast<int128_t>(m.phi()) * m.phi()) {
  const double n = static_cast<double>(m.n());
  const double log_n = std::log(n);
  const double inv_root_p = 1.0 / std::sqrt(static_cast<double>(m.p_min()));
  v_coeff_ = 8.0 * inv_root_p / n * std::pow(log_n, 1.5);
  constant_ = 58.0 * inv_root_p * std::pow(log_n, 3.5);
}

double Prop4Bound::rhs(int128_t l4p4_v) const noexcept {
  return v_coeff_ * std::sqrt(static_cast<double>(l4p4_v)) + constant_;
}

Prop4Gap Prop4Bound::gap(int128_t l4p4_total, int128_t l4p4_j,
                         int128_t l4p4_v) const noexcept {
  int128_t numer = l4p4_total - l4p4_j - l4p4_v - n_sq_ + phi_sq_;
  if (numer < 0) numer = -numer;
  return {static_cast<double>(numer) / static_cast<double>(n_sq_), rhs(l4p4_v), l4p4_v};
}

double proposition4_rhs(const FactoredModulus& m, int128_t l4p4_v) {
  return Prop4Bound(m).rhs(l4p4_v);
}

Prop4Gap proposition4_gap(const FactoredModulus& m, int128_t l4p4_total, int128_t l4p4_j,
                          int128_t l4p4_v) {
  return Prop4Bound(m).gap(l4p4_total, l4p4_j, l4p4_v);
}

Prop4Gap proposition4_gap(const FactoredModulus& m, const TernarySequence& v,
                          const Rotation& rot) {
  if (!in_completion_set(m, v)) {
    throw std::invalid_argument("proposition4_gap: V is not a completion for n=" +
                                std::to_string(m.n()));
  }
  const auto j_rot = rotate(character_polynomial(m), rot);
  const auto v_rot = rotate(v, rot);
  const auto total = complete(j_rot, v_rot);
  return proposition4_gap(m, l4_fourth_power_exact(total), l4_fourth_power_exact(j_rot),
                          l4_fourth_power_exact(v_rot));
}

double SpikeCheck::max_error() const noexcept {
  double worst = 0.0;
  for (const auto& s : values) worst = std::max(worst, std::abs(s.value - Complex(expected, 0.0)));
  return worst;
}

SpikeCheck allones_spike_check(const FactoredModulus& m) {
  const std::int64_t n = m.n();
  const std::int64_t p = m.p_min();
  const auto free = free_indices(m);
  SpikeCheck out;
  out.expected = static_cast<double>(m.phi()) / static_cast<double>(p - 1);
  for (std::int64_t k = 1; k < p; ++k) {
    const std::int64_t u = k * (n / p);
    Complex value{0.0, 0.0};
    for (auto j : free) value += root_of_unity(j * u % n, n);
    out.values.push_back({u, value});
  }
  return out;
}

L4L2MaxCheck l4_l2_max_check(const TernarySequence& a) {
  const double grid = circle_grid_max(a);
  return {static_cast<double>(l4_fourth_power_exact(a)),
          static_cast<double>(l2_squared(a)) * grid * grid};
}

}  // namespace littlewood
