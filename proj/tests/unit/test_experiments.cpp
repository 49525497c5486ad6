#include <doctest.h>

#include <sstream>

#include "littlewood/experiments.hpp"
#include "oracles.hpp"

using namespace littlewood;

namespace {

std::string csv(const SweepResult& r) {
  std::ostringstream os;
  write_csv(os, r.rows);
  return os.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

SweepConfig config(std::vector<std::int64_t> ns, std::vector<Rational> rs,
                   std::vector<CompletionKind> kinds = {}) {
  SweepConfig cfg;
  cfg.n_list = std::move(ns);
  cfg.r_grid = std::move(rs);
  cfg.completions = std::move(kinds);
  return cfg;
}

}  // namespace

TEST_CASE("completion kind names") {
  for (auto k : {CompletionKind::plus_one, CompletionKind::minus_one, CompletionKind::all_ones,
                 CompletionKind::jacobi_product, CompletionKind::two_prime,
                 CompletionKind::random, CompletionKind::exhaustive}) {
    CHECK(parse_completion_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_completion_kind("ones"), ConfigError);
}

TEST_CASE("default r grid") {
  const auto g = default_r_grid();
  REQUIRE(g.size() == 64);
  CHECK(g.front() == Rational(-31, 64));
  CHECK(g.back() == Rational(1, 2));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config({}, {Rational(0)}).validate(), ConfigError);
  CHECK_THROWS_AS(config({15}, {}).validate(), ConfigError);
  CHECK_THROWS_AS(config({9}, {Rational(0)}).validate(), ConfigError);
  CHECK_THROWS_AS(config({105}, {Rational(0)}, {CompletionKind::two_prime}).validate(),
                  ConfigError);
  CHECK_THROWS_AS(config({1155}, {Rational(0)}, {CompletionKind::exhaustive}).validate(),
                  ConfigError);
  auto cfg = config({15}, {Rational(0)});
  cfg.workers = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(run_sweep(8, config({15}, {Rational(0)})), ConfigError);
  CHECK_THROWS_AS(run_theorem3(config({15}, {Rational(0)}, {CompletionKind::jacobi_product})),
                  ConfigError);
  CHECK_THROWS_AS(run_theorem7_exhaustive(config({1155}, {Rational(0)})), ConfigError);
}

TEST_CASE("CSV layout") {
  CHECK(csv_header() ==
        "schema_id,theorem,n,p_min,omega,phi,psi,r_num,r_den,completion,seed,l2sq,l4p4_exact,"
        "l4p4_dft,F,f_r,abs_gap,aux1,aux2");
  const auto res = run_theorem2(config({3}, {Rational(0)}));
  REQUIRE(res.rows.size() == 1);
  const auto cells = split(format_csv_row(res.rows[0]));
  REQUIRE(cells.size() == 19);
  CHECK(cells[0] == "v1");
  CHECK(cells[1] == "2");
  CHECK(cells[2] == "3");
  CHECK(cells[9] == "none");
  CHECK(cells[10] == "");
  CHECK(cells[11] == "2");
  CHECK(cells[12] == "6");
  CHECK(cells[14] == "2");
  CHECK(cells[15] == "1.5");
}

TEST_CASE("theorem 2 rows match independent norms") {
  const auto res = run_theorem2(config({101, 1009}, {Rational(1, 4), Rational(-1, 8)}));
  REQUIRE(res.errors.empty());
  REQUIRE(res.rows.size() == 4);
  for (const auto& row : res.rows) {
    const auto m = factor_odd_squarefree(row.n);
    const auto jr = oracle::coeffs(rotate(character_polynomial(m), Rotation{row.r}));
    const auto l4 = oracle::l4(jr);
    CHECK(*row.l4p4_exact == l4);
    CHECK(row.l2sq == row.n - 1);
    const double l2p4 = static_cast<double>(row.l2sq) * static_cast<double>(row.l2sq);
    const double f = l2p4 / (static_cast<double>(l4) - l2p4);
    CHECK(*row.merit == doctest::Approx(f).epsilon(1e-14));
    CHECK(*row.aux2 == doctest::Approx(std::abs(1.0 / f - 1.0 / row.f_r)).epsilon(1e-12));
    CHECK(row.dft_ok);
  }
  CHECK(res.rows[0].n == 101);
  CHECK(res.rows[1].r == Rational(-1, 8));
}

TEST_CASE("theorem 3 all-ones degradation at n = 15015") {
  const auto res = run_theorem3(config({15015}, {Rational(1, 4)}, {CompletionKind::all_ones}));
  REQUIRE(res.rows.size() == 1);
  const auto& row = res.rows[0];
  CHECK(*row.merit < 0.1);
  CHECK(row.row_check);
  CHECK(row.prop4_violations == 0);
  CHECK(*row.aux1 == doctest::Approx(15015.0 / 54.0));
}

TEST_CASE("theorem 7 at n = 15 agrees with brute force") {
  const auto m = factor_odd_squarefree(15);
  for (auto r : {Rational(0), Rational(1, 4)}) {
    auto cfg = config({15}, {r}, {CompletionKind::all_ones, CompletionKind::jacobi_product,
                                  CompletionKind::two_prime});
    cfg.per_completion_rows = true;
    const auto res = run_theorem7_exhaustive(cfg);
    REQUIRE(res.errors.empty());
    REQUIRE(res.rows.size() == 2 + 3 + 128);

    const auto jr = rotate(character_polynomial(m), Rotation{r});
    std::int64_t best = INT64_MAX, worst = INT64_MIN;
    std::uint64_t best_mask = 0, worst_mask = 0;
    for (std::uint64_t mask = 0; mask < 128; ++mask) {
      const auto l4 = oracle::l4(
          oracle::coeffs(complete(jr, rotate(completion_from_mask(m, mask), Rotation{r}))));
      if (l4 < best) best = l4, best_mask = mask;
      if (l4 > worst) worst = l4, worst_mask = mask;
      const auto& row = res.rows[5 + mask];
      CHECK(*row.l4p4_exact == l4);
    }
    CHECK(*res.rows[0].l4p4_exact == best);
    CHECK(*res.rows[1].l4p4_exact == worst);
    CHECK(res.rows[0].completion ==
          "exhaustive_max:" + completion_sign_word(m, completion_from_mask(m, best_mask)));
    CHECK(res.rows[1].completion ==
          "exhaustive_min:" + completion_sign_word(m, completion_from_mask(m, worst_mask)));
    CHECK(res.rows[0].prop4_checked == 128);
    CHECK(res.rows[0].prop4_violations == 0);
    for (int i = 2; i < 5; ++i) {
      CHECK(*res.rows[i].merit <= *res.rows[0].merit);
      CHECK(*res.rows[i].merit >= *res.rows[1].merit);
    }
  }
}

TEST_CASE("theorem 7 named completions at n = 15, r = 1/4") {
  // Oracle values from direct autocorrelation: all-ones 327, Jacobi-product 455.
  const auto res = run_theorem7_exhaustive(
      config({15}, {Rational(1, 4)}, {CompletionKind::all_ones, CompletionKind::jacobi_product}));
  REQUIRE(res.rows.size() == 4);
  CHECK(*res.rows[2].l4p4_exact == 327);
  CHECK(*res.rows[3].l4p4_exact == 455);
}

TEST_CASE("theorem 4 takes the exhaustive maximum when psi allows") {
  const auto res = run_theorem4_bound(config({35}, {Rational(1, 4)}));
  const auto t7 = run_theorem7_exhaustive(config({35}, {Rational(1, 4)}));
  REQUIRE(res.rows.size() == 1);
  CHECK(res.rows[0].completion.rfind("max_exhaustive:", 0) == 0);
  CHECK(*res.rows[0].l4p4_exact == *t7.rows[0].l4p4_exact);
  CHECK(*res.rows[0].aux2 == 2048.0);
  CHECK(*res.rows[0].aux1 == doctest::Approx(6.0 - *res.rows[0].merit));

  auto sampled = config({1155}, {Rational(1, 4)});
  sampled.samples = 20;
  const auto s = run_theorem4_bound(sampled);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0].completion == "max_sampled");
  CHECK(s.rows[0].prop4_checked == 20);
}

TEST_CASE("theorem 5 summary statistics") {
  auto cfg = config({1155}, {Rational(1, 4)}, {CompletionKind::random});
  cfg.samples = 12;
  cfg.seed = 77;
  const auto res = run_theorem5(cfg);
  REQUIRE(res.rows.size() == 13);
  std::vector<double> f;
  for (int i = 0; i < 12; ++i) {
    CHECK(*res.rows[i].seed == 77u + static_cast<unsigned>(i));
    f.push_back(*res.rows[i].merit);
  }
  double mean = 0;
  for (double x : f) mean += x;
  mean /= 12;
  double var = 0;
  for (double x : f) var += (x - mean) * (x - mean);
  const auto& s = res.rows[12];
  CHECK(s.completion == "random_summary");
  CHECK(*s.merit == doctest::Approx(mean).epsilon(1e-12));
  CHECK(*s.aux1 == doctest::Approx(std::sqrt(var / 11)).epsilon(1e-10));
}

TEST_CASE("sweeps are deterministic across worker counts") {
  auto cfg = config({15, 35, 105, 1155}, default_r_grid(),
                    {CompletionKind::jacobi_product, CompletionKind::all_ones,
                     CompletionKind::random});
  cfg.samples = 3;
  for (int theorem : {2, 3, 5, 6}) {
    cfg.workers = 1;
    const auto serial = csv(run_sweep(theorem, cfg));
    cfg.workers = 4;
    const auto parallel = csv(run_sweep(theorem, cfg));
    CHECK_MESSAGE(serial == parallel, "theorem " << theorem);
    CHECK(serial == csv(run_sweep(theorem, cfg)));
  }
  auto t7 = config({15, 21, 35}, {Rational(0), Rational(1, 4)});
  t7.workers = 3;
  const auto a = csv(run_theorem7_exhaustive(t7));
  t7.workers = 1;
  CHECK(a == csv(run_theorem7_exhaustive(t7)));
}

TEST_CASE("merit_for") {
  const auto m = factor_odd_squarefree(15);
  const auto rep = merit_for(m, Rational(1, 4), CompletionKind::all_ones);
  CHECK(rep.l4p4_exact == 327);
  CHECK(rep.completion_label == "all_ones");
  CHECK(rep.gap.has_value());
  const auto j = merit_for(m, Rational(1, 4), std::nullopt);
  CHECK(j.l2sq == 8);
  CHECK_THROWS_AS(merit_for(factor_odd_squarefree(105), Rational(0), CompletionKind::two_prime),
                  ConfigError);
}
