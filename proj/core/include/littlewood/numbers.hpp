#pragma once

// Elementary number theory over odd square-free moduli: Jacobi symbols,
// Moebius and totient values, Ramanujan sums and the Jacobi-symbol Gauss sum.
// Inputs are desk-scale (n up to ~1e8), so trial division is enough.

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace littlewood {

__extension__ typedef __int128 int128_t;
__extension__ typedef unsigned __int128 uint128_t;

/// Raised for a modulus that is not an odd square-free integer > 1.
class InadmissibleModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An odd square-free n > 1 together with its prime factorisation.
///
/// Only factor_odd_squarefree() constructs one, so every instance satisfies
/// prod(prime_factors) == n, phi == prod(p - 1), psi == n - phi.
class FactoredModulus {
 public:
  std::int64_t n() const noexcept { return n_; }
  std::span<const std::int64_t> prime_factors() const noexcept { return primes_; }
  std::int64_t phi() const noexcept { return phi_; }
  /// Cototient n - phi(n): the number of indices j with gcd(j, n) > 1.
  std::int64_t psi() const noexcept { return n_ - phi_; }
  std::int64_t p_min() const noexcept { return primes_.front(); }
  int omega() const noexcept { return static_cast<int>(primes_.size()); }
  bool is_prime() const noexcept { return primes_.size() == 1; }

  /// phi(d) for a divisor d of n (square-free, so phi(d) = prod over p | d).
  std::int64_t phi_of_divisor(std::int64_t d) const;

  friend bool operator==(const FactoredModulus& a, const FactoredModulus& b) {
    return a.n_ == b.n_;
  }

 private:
  friend FactoredModulus factor_odd_squarefree(std::int64_t n);
  FactoredModulus(std::int64_t n, std::vector<std::int64_t> primes);

  std::int64_t n_;
  std::vector<std::int64_t> primes_;
  std::int64_t phi_;
};

/// Factorises n by trial division. Throws InadmissibleModulus when n <= 1,
/// n is even, or some prime divides n twice; the message names the factor.
FactoredModulus factor_odd_squarefree(std::int64_t n);

/// True when factor_odd_squarefree(n) would succeed.
bool is_odd_squarefree(std::int64_t n);

/// Jacobi symbol (j | n) for odd n >= 1 and any integer j (reduced mod n).
/// (j | 1) == 1 for every j. Throws std::invalid_argument for even or
/// nonpositive n.
int jacobi(std::int64_t j, std::int64_t n);

/// Moebius function; mobius(1) == 1.
int mobius(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;

/// Non-negative residue of j modulo n (n > 0).
constexpr std::int64_t mod_floor(std::int64_t j, std::int64_t n) noexcept {
  const std::int64_t r = j % n;
  return r < 0 ? r + n : r;
}

/// Ramanujan's sum over the units mod n, returned exactly as
/// mu(n / gcd(u, n)) * phi(gcd(u, n)).
std::int64_t ramanujan_sum(std::int64_t u, const FactoredModulus& m);

/// i^((m-1)^2/4) as an exact exponent in {0, 1, 2, 3}.
int gauss_sum_i_exponent(std::int64_t m) noexcept;

/// i^k for k taken mod 4, without floating powers.
std::complex<double> i_power(int k) noexcept;

/// Closed form of sum_{l=0}^{m-1} (l | m) zeta_m^{j l}:
/// i^((m-1)^2/4) * (j | m) * sqrt(m).
std::complex<double> gauss_sum_jacobi(std::int64_t j, const FactoredModulus& m);

/// Odd square-free integers in [lo, hi], ascending.
std::vector<std::int64_t> odd_squarefree_range(std::int64_t lo, std::int64_t hi);

bool is_prime(std::int64_t n);

}  // namespace littlewood
