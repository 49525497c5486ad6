#pragma once

// Closed forms paired with direct evaluations. Each check returns both
// sides; the caller decides the tolerance.

#include <cstdint>
#include <vector>

#include "littlewood/norms.hpp"
#include "littlewood/numbers.hpp"
#include "littlewood/sequences.hpp"
#include "littlewood/spectrum.hpp"

namespace littlewood {

/// Signature of a Jacobi-symbol implementation, so checks can be run
/// against a deliberately broken one.
using JacobiFn = int (*)(std::int64_t, std::int64_t);

struct ComplexPair {
  Complex closed;
  Complex direct;
  double error() const noexcept { return std::abs(closed - direct); }
};

/// Ramanujan sum: closed form mu(n/g) phi(g) against the sum of zeta_n^{ju}
/// over units j.
ComplexPair ramanujan_sum_check(std::int64_t u, const FactoredModulus& m);

/// Gauss sum: i^((m-1)^2/4) (j|m) sqrt(m) against sum_l (l|m) zeta_m^{jl}.
/// Both sides use `symbol`.
ComplexPair gauss_sum_check(std::int64_t j, const FactoredModulus& m,
                            JacobiFn symbol = &jacobi);

struct IntegerPair {
  std::int64_t lhs;
  std::int64_t rhs;
};

/// sum_j (j|n)((j+u)|n) computed directly, against mu(n/g) phi(g).
IntegerPair character_sum_check(std::int64_t u, const FactoredModulus& m,
                                JacobiFn symbol = &jacobi);

struct ExpSumCheck {
  double lhs;
  double rhs;
  double imag_residual;
};

/// sum_{k=1}^{n-1} zeta_n^{jk} / |1 - zeta_n^k|^2 against
/// (n^2/2)(|j|/n - 1/2)^2 - (n^2+2)/24. Requires |j| <= n, n >= 2.
ExpSumCheck exp_sum_identity_check(std::int64_t j, std::int64_t n);

/// J_r(zeta_n^j) = i^((n-1)^2/4) zeta_n^{-jR} (j|n) sqrt(n), j = 0..n-1.
std::vector<Complex> spectral_values_J(const FactoredModulus& m, const Rotation& rot);

struct InterpolationCheck {
  double max_circle_estimate;  // max over 8n equispaced points
  double bound;                // 2 log(n) max_k |A(zeta_n^k)|
};

/// Requires n > 2.
InterpolationCheck interpolation_bound_check(const TernarySequence& a);

/// 2 sqrt(n) log(n), the unit-circle bound for every rotation of J.
double character_circle_bound(std::int64_t n);

/// Max of |A| over 8n equispaced points of the unit circle.
double circle_grid_max(const TernarySequence& a);

struct Prop4Gap {
  double lhs;
  double rhs;
  int128_t l4p4_v;
  bool holds() const noexcept { return lhs < rhs; }
};

/// Right-hand side 8 p^{-1/2} n^{-1} (log n)^{3/2} ||V_r||_4^2
///                 + 58 p^{-1/2} (log n)^{7/2},
/// with the n-dependent factors computed once.
class Prop4Bound {
 public:
  explicit Prop4Bound(const FactoredModulus& m);

  double rhs(int128_t l4p4_v) const noexcept;
  /// See proposition4_gap().
  Prop4Gap gap(int128_t l4p4_total, int128_t l4p4_j, int128_t l4p4_v) const noexcept;

 private:
  int128_t n_sq_;
  int128_t phi_sq_;
  double v_coeff_;
  double constant_;
};

double proposition4_rhs(const FactoredModulus& m, int128_t l4p4_v);

/// Gap from precomputed exact fourth powers of J_r + V_r, J_r and V_r.
/// The left side |1/F(J_r+V_r) - (phi/n)^2/F(J_r) - ||V_r||^4/n^2| equals
/// |l4(J_r+V_r) - l4(J_r) - l4(V_r) - n^2 + phi^2| / n^2, evaluated in integers.
Prop4Gap proposition4_gap(const FactoredModulus& m, int128_t l4p4_total, int128_t l4p4_j,
                          int128_t l4p4_v);

/// Same, starting from V in V_n and a rotation.
Prop4Gap proposition4_gap(const FactoredModulus& m, const TernarySequence& v,
                          const Rotation& rot);

/// Spike of the all-ones completion at u = k n / p_n, k = 1..p_n - 1.
struct SpikeValue {
  std::int64_t u;
  Complex value;
};

struct SpikeCheck {
  double expected;  // phi(n) / (p_n - 1)
  std::vector<SpikeValue> values;
  double max_error() const noexcept;
};

SpikeCheck allones_spike_check(const FactoredModulus& m);

struct L4L2MaxCheck {
  double l4p4;
  double bound;  // l2sq * (grid max)^2
};

/// ||A||_4^4 <= ||A||_2^2 max |A|^2 with the grid max standing in for max.
L4L2MaxCheck l4_l2_max_check(const TernarySequence& a);

}  // namespace littlewood
