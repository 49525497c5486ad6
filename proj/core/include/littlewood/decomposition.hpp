#pragma once

#include <cstdint>

#include "littlewood/sequences.hpp"
#include "littlewood/spectrum.hpp"

namespace littlewood {

/// Terms of the Hoeholdt-Jensen expansion of ||A||_4^4 / n^2 for a real A of
/// even degree n - 1, built from the values A(zeta_n^a). Each term is the real
/// part; imag_residual is |Im(total)|, which should vanish.
struct DecompositionReport {
  double main_term = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double total = 0.0;
  double imag_residual = 0.0;
};

/// Default cost guard: the C sum is O(n^3).
inline constexpr std::int64_t kDefaultDecompositionMaxN = 255;

/// Lambda_A(j, k, l) = sum_a A(z^a) conj(A(z^{a+j})) A(z^{a+k}) conj(A(z^{a+l}))
/// over the precomputed values, indices mod n.
Complex lambda_sum(std::span<const Complex> values, std::int64_t j, std::int64_t k,
                   std::int64_t l);

/// Throws std::invalid_argument for even n or n > max_n.
DecompositionReport hj_decomposition(const TernarySequence& a,
                                     std::int64_t max_n = kDefaultDecompositionMaxN);

}  // namespace littlewood
