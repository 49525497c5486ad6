#include "littlewood/exhaustive.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "littlewood/sequences.hpp"

namespace littlewood {
namespace {

// Aperiodic autocorrelation of x kept in sync under single-sign flips.
class IncrementalProfile {
 public:
  explicit IncrementalProfile(std::vector<std::int32_t> x) : x_(std::move(x)), c_(x_.size(), 0) {
    const auto n = x_.size();
    for (std::size_t u = 0; u < n; ++u) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j + u < n; ++j) acc += x_[j] * x_[j + u];
      c_[u] = acc;
    }
    for (std::size_t u = 1; u < n; ++u) tail_ += c_[u] * c_[u];
  }

  // x_k -> -x_k with x_k = +-1. c_0 is unchanged; for u >= 1 the terms
  // x_k x_{k+u} and x_{k-u} x_k both change sign.
  void flip(std::size_t k) {
    const auto n = x_.size();
    const std::int64_t d = -2 * x_[k];
    for (std::size_t u = 1; u < n; ++u) {
      std::int32_t neighbours = 0;
      if (k + u < n) neighbours += x_[k + u];
      if (u <= k) neighbours += x_[k - u];
      if (neighbours == 0) continue;
      const std::int64_t old = c_[u];
      const std::int64_t now = old + d * neighbours;
      c_[u] = now;
      tail_ += now * now - old * old;
    }
    x_[k] = -x_[k];
  }

  int128_t l4p4() const noexcept {
    const int128_t c0 = c_.empty() ? 0 : c_[0];
    return c0 * c0 + 2 * static_cast<int128_t>(tail_);
  }

 private:
  std::vector<std::int32_t> x_;
  std::vector<std::int64_t> c_;
  std::int64_t tail_ = 0;
};

}  // namespace

void scan_completions(const FactoredModulus& m, std::int64_t shift,
                      const std::function<void(const CompletionSample&)>& visit) {
  if (m.psi() > kMaxEnumerationPsi) {
    throw std::invalid_argument("refusing to scan 2^" + std::to_string(m.psi()) +
                                " completions of n=" + std::to_string(m.n()) +
                                ": limit is psi <= " + std::to_string(kMaxEnumerationPsi));
  }
  if (m.n() >= (std::int64_t{1} << 21)) {
    throw std::invalid_argument("scan_completions: n=" + std::to_string(m.n()) +
                                " is too long for 64-bit incremental sums");
  }
  const std::int64_t n = m.n();
  const std::int64_t r = mod_floor(shift, n);
  const auto free = free_indices(m);
  const auto psi = free.size();

  // Positions of the free coefficients after rotation: index j moves to j - R.
  std::vector<std::size_t> pos(psi);
  for (std::size_t i = 0; i < psi; ++i) pos[i] = static_cast<std::size_t>(mod_floor(free[i] - r, n));

  // Mask 0: every free sign is -1.
  const auto j_rot = rotate_by(character_polynomial(m), shift);
  std::vector<std::int32_t> total(n);
  std::vector<std::int32_t> v(n, 0);
  for (std::int64_t k = 0; k < n; ++k) total[k] = j_rot[k];
  for (auto p : pos) {
    total[p] = -1;
    v[p] = -1;
  }
  IncrementalProfile total_profile(std::move(total));
  IncrementalProfile v_profile(std::move(v));

  std::uint64_t mask = 0;
  visit({mask, total_profile.l4p4(), v_profile.l4p4()});
  const std::uint64_t count = std::uint64_t{1} << psi;
  for (std::uint64_t step = 1; step < count; ++step) {
    const int bit = std::countr_zero(step);
    mask ^= std::uint64_t{1} << bit;
    const std::size_t k = pos[psi - 1 - static_cast<std::size_t>(bit)];
    total_profile.flip(k);
    v_profile.flip(k);
    visit({mask, total_profile.l4p4(), v_profile.l4p4()});
  }
}

}  // namespace littlewood
