#include <doctest.h>

#include <random>

#include "littlewood/decomposition.hpp"
#include "littlewood/norms.hpp"
#include "littlewood/spectrum.hpp"
#include "oracles.hpp"

using namespace littlewood;

namespace {

TernarySequence seq(std::vector<int> a) { return oracle::to_sequence(a); }

}  // namespace

TEST_CASE("autocorrelation small cases") {
  CHECK(autocorrelation_direct(seq({1, 1, 1})).c == std::vector<std::int64_t>{3, 2, 1});
  CHECK(autocorrelation_direct(seq({1, 1, -1})).c == std::vector<std::int64_t>{3, 0, -1});
  const auto fft = autocorrelation_fft(seq({1, 1, -1}));
  REQUIRE(fft.has_value());
  CHECK(fft->c == std::vector<std::int64_t>{3, 0, -1});
}

TEST_CASE("FFT autocorrelation equals the direct route after rounding") {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<std::size_t> len(1, 4096);
  for (int t = 0; t < 500; ++t) {
    const auto a = oracle::random_ternary(gen, len(gen));
    const auto s = oracle::to_sequence(a);
    double residual = 1.0;
    const auto fft = autocorrelation_fft(s, &residual);
    REQUIRE(fft.has_value());
    CHECK(residual < kFftRoundingGuard);
    CHECK(fft->c == oracle::autocorrelation(a));
    CHECK(autocorrelation(s).c == fft->c);
  }
}

TEST_CASE("exact L4") {
  CHECK(l4_fourth_power_exact(seq({1, 1, 1})) == 19);
  CHECK(l4_fourth_power_exact(seq({1, 1, -1})) == 11);
  CHECK(l4_fourth_power_exact(seq({1})) == 1);
  CHECK(to_string(l4_fourth_power_exact(seq({1, 1, 1}))) == "19");
  const int128_t big = static_cast<int128_t>(1) << 70;
  CHECK(to_string(big) == "1180591620717411303424");
  CHECK(to_string(-big) == "-1180591620717411303424");
}

TEST_CASE("DFT L4 matches the exact path on random sequences") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> half(0, 128);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 * static_cast<std::size_t>(half(gen)) + 1;
    const auto a = oracle::random_ternary(gen, n);
    const auto s = oracle::to_sequence(a);
    const auto exact = l4_fourth_power_exact(s);
    CHECK(exact == oracle::l4(a));
    const double dft = l4_fourth_power_dft(s);
    CHECK(std::abs(dft - static_cast<double>(exact)) <=
          1e-9 * std::max(1.0, static_cast<double>(exact)));
  }
  CHECK(std::abs(l4_fourth_power_dft(seq({1, 1, 1})) - 19.0) < 1e-9);
  CHECK(std::abs(l4_fourth_power_dft(seq({1})) - 1.0) < 1e-12);
  const auto j15 = character_polynomial(factor_odd_squarefree(15));
  CHECK(std::abs(l4_fourth_power_dft(j15) - static_cast<double>(l4_fourth_power_exact(j15))) <
        1e-9);
}

TEST_CASE("merit factor") {
  CHECK(*merit_factor(seq({1, 1, -1})) == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(*merit_factor(seq({1, 1, 1})) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK_FALSE(merit_factor(seq({1})).has_value());
  CHECK_FALSE(merit_factor(seq({0, 0})).has_value());
}

TEST_CASE("asymptotic profile f(r)") {
  CHECK(asymptotic_f(Rational(1, 4)) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(asymptotic_f(Rational(-1, 4)) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(asymptotic_f(Rational(0)) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(asymptotic_f(Rational(5, 4)) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(asymptotic_f(Rational(1, 2)) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(reduce_rotation(Rational(1, 2)) == Rational(1, 2));
  CHECK(reduce_rotation(Rational(-1, 2)) == Rational(1, 2));
  CHECK(reduce_rotation(Rational(7, 4)) == Rational(-1, 4));
  for (int k = -200; k <= 200; ++k) {
    const Rational r(k, 37);
    const auto red = reduce_rotation(r);
    CHECK(2 * red.num > -red.den);
    CHECK(2 * red.num <= red.den);
    const double x = std::abs(red.to_double()) - 0.25;
    CHECK(asymptotic_f(r) == doctest::Approx(1.0 / (1.0 / 6.0 + 8.0 * x * x)).epsilon(1e-14));
    CHECK(asymptotic_f(r.to_double()) == doctest::Approx(asymptotic_f(r)).epsilon(1e-12));
  }
}

TEST_CASE("evaluation on roots of unity") {
  std::mt19937_64 gen(5);
  for (std::size_t n : {1u, 2u, 3u, 15u, 64u, 101u}) {
    const auto a = oracle::random_ternary(gen, n);
    for (std::int64_t m : {static_cast<std::int64_t>(n), static_cast<std::int64_t>(2 * n), 7L}) {
      const auto fast = evaluate_on_roots(oracle::to_sequence(a).coeffs(), m);
      REQUIRE(fast.size() == static_cast<std::size_t>(m));
      for (std::int64_t k = 0; k < m; ++k) {
        const auto ref = oracle::evaluate(a, k, m);
        CHECK(std::abs(fast[k] - Complex(static_cast<double>(ref.real()),
                                         static_cast<double>(ref.imag()))) < 1e-9);
      }
    }
  }
}

TEST_CASE("measure fills a consistent report") {
  const auto m = factor_odd_squarefree(1009);
  const auto j = rotate(character_polynomial(m), Rotation{Rational(1, 4)});
  const auto rep = measure(j, Rational(1, 4), "none");
  CHECK(rep.n == 1009);
  CHECK(rep.l2sq == 1008);
  CHECK(rep.l4p4_exact == oracle::l4(oracle::coeffs(j)));
  CHECK(rep.dft_relative_error() < 1e-9);
  CHECK(rep.f_of_r == doctest::Approx(6.0));
  const double l2p4 = 1008.0 * 1008.0;
  CHECK(*rep.merit ==
        doctest::Approx(l2p4 / (static_cast<double>(rep.l4p4_exact) - l2p4)).epsilon(1e-14));
}

TEST_CASE("Hoeholdt-Jensen decomposition") {
  SUBCASE("n = 3") {
    const auto d = hj_decomposition(seq({1, 1, 1}));
    CHECK(d.total == doctest::Approx(19.0 / 9.0).epsilon(1e-12));
    CHECK(d.main_term + d.b + d.c + d.d == doctest::Approx(d.total).epsilon(1e-14));
  }
  SUBCASE("J + V for n = 5") {
    const auto m = factor_odd_squarefree(5);
    const auto t = complete(character_polynomial(m), completion_all_ones(m));
    const auto d = hj_decomposition(t);
    CHECK(d.total ==
          doctest::Approx(static_cast<double>(l4_fourth_power_exact(t)) / 25.0).epsilon(1e-12));
  }
  SUBCASE("rotated J for n = 15") {
    const auto j = rotate(character_polynomial(factor_odd_squarefree(15)),
                          Rotation{Rational(1, 4)});
    const auto d = hj_decomposition(j);
    CHECK(d.total ==
          doctest::Approx(static_cast<double>(l4_fourth_power_exact(j)) / 225.0).epsilon(1e-12));
    CHECK(d.imag_residual < 1e-9);
  }
  SUBCASE("random odd lengths") {
    std::mt19937_64 gen(11);
    for (std::size_t n : {7u, 21u, 63u, 127u}) {
      const auto a = oracle::random_ternary(gen, n);
      const auto d = hj_decomposition(oracle::to_sequence(a));
      const double exact = static_cast<double>(oracle::l4(a)) / static_cast<double>(n * n);
      CHECK(std::abs(d.total - exact) <= 1e-8 * exact);
    }
  }
  CHECK_THROWS(hj_decomposition(seq({1, 1})));
  CHECK_THROWS(hj_decomposition(seq(std::vector<int>(301, 1))));
}
