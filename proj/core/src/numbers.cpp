#include "littlewood/numbers.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace littlewood {

FactoredModulus::FactoredModulus(std::int64_t n, std::vector<std::int64_t> primes)
    : n_(n), primes_(std::move(primes)), phi_(1) {
  for (auto p : primes_) phi_ *= p - 1;
}

std::int64_t FactoredModulus::phi_of_divisor(std::int64_t d) const {
  if (d <= 0 || n_ % d != 0) {
    throw std::invalid_argument("phi_of_divisor: " + std::to_string(d) +
                                " does not divide " + std::to_string(n_));
  }
  std::int64_t result = 1;
  for (auto p : primes_) {
    if (d % p == 0) result *= p - 1;
  }
  return result;
}

FactoredModulus factor_odd_squarefree(std::int64_t n) {
  if (n <= 1) {
    throw InadmissibleModulus("modulus must be > 1, got " + std::to_string(n));
  }
  if (n % 2 == 0) {
    throw InadmissibleModulus("modulus " + std::to_string(n) +
                              " is even (factor 2)");
  }
  std::vector<std::int64_t> primes;
  std::int64_t rest = n;
  for (std::int64_t p = 3; p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) {
      throw InadmissibleModulus("modulus " + std::to_string(n) +
                                " is not square-free (" + std::to_string(p) +
                                "^2 divides it)");
    }
    primes.push_back(p);
  }
  if (rest > 1) primes.push_back(rest);
  return FactoredModulus(n, std::move(primes));
}

bool is_odd_squarefree(std::int64_t n) {
  try {
    factor_odd_squarefree(n);
    return true;
  } catch (const InadmissibleModulus&) {
    return false;
  }
}

int jacobi(std::int64_t j, std::int64_t n) {
  if (n <= 0 || n % 2 == 0) {
    throw std::invalid_argument("jacobi: modulus must be odd and positive, got " +
                                std::to_string(n));
  }
  std::int64_t a = mod_floor(j, n);
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::int64_t r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int mobius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
  return std::gcd(a, b);
}

std::int64_t ramanujan_sum(std::int64_t u, const FactoredModulus& m) {
  const std::int64_t g = gcd(u, m.n());  // gcd(0, n) == n
  // n / g is square-free with omega(n) - omega(g) prime factors.
  int sign = 1;
  for (auto p : m.prime_factors()) {
    if (g % p != 0) sign = -sign;
  }
  return sign * m.phi_of_divisor(g);
}

int gauss_sum_i_exponent(std::int64_t m) noexcept {
  const std::int64_t h = ((m - 1) / 2) % 4;
  return static_cast<int>((h * h) % 4);
}

std::complex<double> i_power(int k) noexcept {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::complex<double> gauss_sum_jacobi(std::int64_t j, const FactoredModulus& m) {
  const int symbol = jacobi(j, m.n());
  if (symbol == 0) return {0.0, 0.0};
  return i_power(gauss_sum_i_exponent(m.n())) *
         (static_cast<double>(symbol) * std::sqrt(static_cast<double>(m.n())));
}

std::vector<std::int64_t> odd_squarefree_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n) {
    if (is_odd_squarefree(n)) out.push_back(n);
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace littlewood
