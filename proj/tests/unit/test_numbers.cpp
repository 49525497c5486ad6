#include <doctest.h>

#include <cmath>
#include <random>

#include "littlewood/numbers.hpp"
#include "oracles.hpp"

using namespace littlewood;

TEST_CASE("factor_odd_squarefree small cases") {
  const auto m15 = factor_odd_squarefree(15);
  CHECK(std::vector<std::int64_t>(m15.prime_factors().begin(), m15.prime_factors().end()) ==
        std::vector<std::int64_t>{3, 5});
  CHECK(m15.phi() == 8);
  CHECK(m15.psi() == 7);
  CHECK(m15.p_min() == 3);
  CHECK(m15.omega() == 2);

  const auto m3 = factor_odd_squarefree(3);
  CHECK(m3.phi() == 2);
  CHECK(m3.psi() == 1);
  CHECK(m3.omega() == 1);
  CHECK(m3.is_prime());

  CHECK_THROWS_AS(factor_odd_squarefree(9), InadmissibleModulus);
  CHECK_THROWS_AS(factor_odd_squarefree(12), InadmissibleModulus);
  CHECK_THROWS_AS(factor_odd_squarefree(1), InadmissibleModulus);
  CHECK_THROWS_AS(factor_odd_squarefree(-15), InadmissibleModulus);
}

TEST_CASE("factor_odd_squarefree agrees with trial division") {
  for (std::int64_t n = 3; n < 3000; n += 2) {
    const auto f = oracle::prime_factors(n);
    const bool squarefree = oracle::mobius(n) != 0;
    CHECK(is_odd_squarefree(n) == squarefree);
    if (!squarefree) continue;
    const auto m = factor_odd_squarefree(n);
    REQUIRE(m.prime_factors().size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(m.prime_factors()[i] == f[i]);
    CHECK(m.phi() == oracle::totient(n));
    CHECK(m.psi() == n - oracle::totient(n));
    CHECK(m.p_min() == f.front());
  }
}

TEST_CASE("jacobi spot values") {
  CHECK(jacobi(0, 15) == 0);
  CHECK(jacobi(1, 15) == 1);
  CHECK(jacobi(1, 1009) == 1);
  CHECK(jacobi(2, 15) == 1);
  CHECK(jacobi(7, 15) == -1);
  CHECK(jacobi(0, 1) == 1);
  CHECK(jacobi(-1, 3) == -1);
  CHECK_THROWS(jacobi(1, 4));
  CHECK_THROWS(jacobi(1, 0));
}

TEST_CASE("jacobi agrees with the Euler-criterion product") {
  for (std::int64_t n = 3; n < 400; n += 2) {
    for (std::int64_t j = -n; j <= 2 * n; ++j) {
      CHECK_MESSAGE(jacobi(j, n) == oracle::jacobi(j, n), "j=" << j << " n=" << n);
    }
  }
}

TEST_CASE("jacobi is multiplicative in both arguments") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::int64_t> odd(1, 5000);
  std::uniform_int_distribution<std::int64_t> any(-100000, 100000);
  for (int t = 0; t < 2000; ++t) {
    const auto m = 2 * odd(gen) + 1;
    const auto n = 2 * odd(gen) + 1;
    const auto a = any(gen);
    const auto b = any(gen);
    CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
    CHECK(jacobi(a, m * n) == jacobi(a, m) * jacobi(a, n));
  }
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(15) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(105) == -1);
  for (std::int64_t n = 1; n < 2000; ++n) CHECK(mobius(n) == oracle::mobius(n));
}

TEST_CASE("ramanujan_sum closed form") {
  const auto m = factor_odd_squarefree(15);
  CHECK(ramanujan_sum(0, m) == 8);
  CHECK(ramanujan_sum(1, m) == 1);
  CHECK(ramanujan_sum(5, m) == -4);
  for (std::int64_t n : {3, 15, 105, 1155}) {
    const auto mn = factor_odd_squarefree(n);
    for (std::int64_t u = -n; u < 2 * n; u += 7) {
      std::complex<long double> direct = 0;
      for (std::int64_t j = 1; j < n; ++j) {
        if (std::gcd(j, n) == 1) direct += oracle::evaluate({0, 1}, mod_floor(j * u, n), n);
      }
      CHECK(std::abs(direct.real() - static_cast<long double>(ramanujan_sum(u, mn))) < 1e-9);
    }
  }
}

TEST_CASE("gauss_sum_jacobi") {
  const auto m3 = factor_odd_squarefree(3);
  const auto g = gauss_sum_jacobi(1, m3);
  CHECK(std::abs(g - std::complex<double>(0.0, std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(gauss_sum_jacobi(3, m3)) < 1e-12);
  const auto g5 = gauss_sum_jacobi(1, factor_odd_squarefree(5));
  CHECK(std::abs(g5 - std::complex<double>(std::sqrt(5.0), 0.0)) < 1e-12);
}

TEST_CASE("odd_squarefree_range") {
  const auto r = odd_squarefree_range(1, 30);
  CHECK(r == std::vector<std::int64_t>{3, 5, 7, 11, 13, 15, 17, 19, 21, 23, 29});
  for (auto n : odd_squarefree_range(3, 999)) CHECK(oracle::mobius(n) != 0);
  std::size_t count = 0;
  for (std::int64_t n = 3; n <= 999; n += 2) count += oracle::mobius(n) != 0;
  CHECK(odd_squarefree_range(3, 999).size() == count);
}

TEST_CASE("mod_floor") {
  CHECK(mod_floor(-1, 15) == 14);
  CHECK(mod_floor(15, 15) == 0);
  CHECK(mod_floor(-30, 15) == 0);
  CHECK(mod_floor(7, 15) == 7);
}
