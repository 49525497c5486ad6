#include <doctest.h>

#include <map>

#include "littlewood/exhaustive.hpp"
#include "oracles.hpp"

using namespace littlewood;

TEST_CASE("Gray scan visits every completion with exact norms") {
  for (std::int64_t n : {3, 15, 21, 35}) {
    const auto m = factor_odd_squarefree(n);
    for (auto r : {Rational(0), Rational(1, 4), Rational(-1, 3)}) {
      const auto shift = Rotation{r}.shift(n);
      const auto jr = rotate_by(character_polynomial(m), shift);
      std::map<std::uint64_t, CompletionSample> seen;
      scan_completions(m, shift, [&](const CompletionSample& s) { seen[s.mask] = s; });
      REQUIRE(seen.size() == (std::uint64_t{1} << m.psi()));
      for (const auto& [mask, s] : seen) {
        const auto vr = rotate_by(completion_from_mask(m, mask), shift);
        const auto total = oracle::coeffs(complete(jr, vr));
        CHECK(s.l4p4_total == oracle::l4(total));
        CHECK(s.l4p4_v == oracle::l4(oracle::coeffs(vr)));
      }
    }
  }
}

TEST_CASE("Gray scan order is fixed") {
  const auto m = factor_odd_squarefree(15);
  std::vector<std::uint64_t> a, b;
  scan_completions(m, 3, [&](const CompletionSample& s) { a.push_back(s.mask); });
  scan_completions(m, 3, [&](const CompletionSample& s) { b.push_back(s.mask); });
  CHECK(a == b);
  CHECK(a.front() == 0);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(std::popcount(a[i] ^ a[i - 1]) == 1);
}

TEST_CASE("scan guard") {
  CHECK_THROWS_AS(scan_completions(factor_odd_squarefree(1155), 0, [](const CompletionSample&) {}),
                  std::invalid_argument);
}
