#include "littlewood/decomposition.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "littlewood/numbers.hpp"

namespace littlewood {

Complex lambda_sum(std::span<const Complex> values, std::int64_t j, std::int64_t k,
                   std::int64_t l) {
  const auto n = static_cast<std::int64_t>(values.size());
  Complex acc{0.0, 0.0};
  for (std::int64_t a = 0; a < n; ++a) {
    acc += values[a] * std::conj(values[mod_floor(a + j, n)]) * values[mod_floor(a + k, n)] *
           std::conj(values[mod_floor(a + l, n)]);
  }
  return acc;
}

DecompositionReport hj_decomposition(const TernarySequence& a, std::int64_t max_n) {
  const std::int64_t n = a.n();
  if (n % 2 == 0) {
    throw std::invalid_argument("hj_decomposition needs odd n (even degree), got n=" +
                                std::to_string(n));
  }
  if (n > max_n) {
    throw std::invalid_argument("hj_decomposition: n=" + std::to_string(n) +
                                " exceeds the O(n^3) cost guard " + std::to_string(max_n));
  }
  const auto values = evaluate_on_roots(a.coeffs(), static_cast<std::size_t>(n));
  std::vector<Complex> zeta(n);
  for (std::int64_t k = 0; k < n; ++k) zeta[k] = root_of_unity(k, n);
  auto at = [&](std::int64_t idx) -> const Complex& { return values[idx % n]; };

  const double nd = static_cast<double>(n);
  const double n5 = std::pow(nd, 5);

  double lambda000 = 0.0;
  for (const auto& v : values) lambda000 += std::norm(v) * std::norm(v);
  const Complex main_term = (2.0 * nd * nd + 1.0) / (3.0 * n5) * lambda000;

  Complex b{0.0, 0.0};
  Complex d{0.0, 0.0};
  Complex c{0.0, 0.0};
  std::vector<Complex> p(n);  // |A_a|^2 A_{a+k}
  std::vector<Complex> q(n);  // A_a^2 conj(A_{a+k})
  for (std::int64_t k = 1; k < n; ++k) {
    const Complex one_minus = 1.0 - zeta[k];

    const Complex l00k = lambda_sum(values, 0, 0, k);
    b += (l00k + zeta[k] * std::conj(l00k)) / (one_minus * one_minus) * (1.0 + zeta[k]);

    for (std::int64_t s = 0; s < n; ++s) {
      p[s] = std::norm(values[s]) * at(s + k);
      q[s] = values[s] * values[s] * std::conj(at(s + k));
    }
    for (std::int64_t l = 1; l < n; ++l) {
      Complex l0kl{0.0, 0.0};  // Lambda(0, k, l)
      Complex lk0l{0.0, 0.0};  // Lambda(k, 0, l)
      for (std::int64_t s = 0; s < n; ++s) {
        const Complex w = std::conj(at(s + l));
        l0kl += p[s] * w;
        lk0l += q[s] * w;
      }
      if (l == k) {
        d += (2.0 * l0kl + std::conj(zeta[k]) * lk0l) / std::norm(one_minus);
      } else {
        c += (4.0 * zeta[k] * l0kl + lk0l + zeta[k] * zeta[l] * std::conj(lk0l)) /
             (one_minus * (1.0 - zeta[l]));
      }
    }
  }
  b *= 2.0 / n5;
  c *= -2.0 / n5;
  d *= 4.0 / n5;

  const Complex total = main_term + b + c + d;
  return DecompositionReport{main_term.real(), b.real(), c.real(), d.real(), total.real(),
                             std::abs(total.imag())};
}

}  // namespace littlewood
