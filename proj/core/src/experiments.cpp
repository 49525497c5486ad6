#include "littlewood/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include "littlewood/decomposition.hpp"
#include "littlewood/exhaustive.hpp"

namespace littlewood {

std::string_view to_string(CompletionKind kind) noexcept {
  switch (kind) {
    case CompletionKind::plus_one: return "plus_one";
    case CompletionKind::minus_one: return "minus_one";
    case CompletionKind::all_ones: return "all_ones";
    case CompletionKind::jacobi_product: return "jacobi_product";
    case CompletionKind::two_prime: return "two_prime";
    case CompletionKind::random: return "random";
    case CompletionKind::exhaustive: return "exhaustive";
  }
  return "?";
}

CompletionKind parse_completion_kind(std::string_view text) {
  for (auto k : {CompletionKind::plus_one, CompletionKind::minus_one, CompletionKind::all_ones,
                 CompletionKind::jacobi_product, CompletionKind::two_prime,
                 CompletionKind::random, CompletionKind::exhaustive}) {
    if (text == to_string(k)) return k;
  }
  throw ConfigError("unknown completion '" + std::string(text) + "'");
}

bool SweepConfig::has(CompletionKind kind) const noexcept {
  return std::find(completions.begin(), completions.end(), kind) != completions.end();
}

void SweepConfig::validate() const {
  if (n_list.empty()) throw ConfigError("n list is empty");
  if (r_grid.empty()) throw ConfigError("r grid is empty");
  if (workers == 0) throw ConfigError("workers must be at least 1");
  if (samples < 1) throw ConfigError("samples must be at least 1");
  for (auto n : n_list) {
    FactoredModulus m = [&] {
      try {
        return factor_odd_squarefree(n);
      } catch (const InadmissibleModulus& e) {
        throw ConfigError(std::string("inadmissible n: ") + e.what());
      }
    }();
    if (has(CompletionKind::exhaustive) && m.psi() > kMaxEnumerationPsi) {
      throw ConfigError("exhaustive completion needs psi(n) <= 24; n=" + std::to_string(n) +
                        " has psi=" + std::to_string(m.psi()));
    }
    if (has(CompletionKind::two_prime) && m.omega() != 2) {
      throw ConfigError("two_prime completion needs omega(n) = 2; n=" + std::to_string(n) +
                        " has omega=" + std::to_string(m.omega()));
    }
  }
}

std::vector<Rational> default_r_grid() {
  std::vector<Rational> grid;
  for (int k = -31; k <= 32; ++k) grid.emplace_back(k, 64);
  return grid;
}

namespace {

// Runs body(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

struct Cell {
  const FactoredModulus* modulus;
  Rational r;
};

// State shared by every row of one (n, r) cell.
struct CellContext {
  const FactoredModulus& m;
  Rational r;
  std::int64_t shift;
  TernarySequence j_rot;
  int128_t l4p4_j;
  Prop4Bound prop4;
  double f_r;

  CellContext(const FactoredModulus& modulus, const Rational& rot)
      : m(modulus),
        r(rot),
        shift(Rotation{rot}.shift(modulus.n())),
        j_rot(rotate_by(character_polynomial(modulus), shift)),
        l4p4_j(l4_fourth_power_exact(j_rot)),
        prop4(modulus),
        f_r(asymptotic_f(rot)) {}

  // (phi/n)^2 / F(J_r) = (l4(J_r) - phi^2) / n^2
  double scaled_inverse_merit_j() const {
    const int128_t phi = m.phi();
    const double n = static_cast<double>(m.n());
    return static_cast<double>(l4p4_j - phi * phi) / (n * n);
  }
};

double inverse_merit(std::int64_t l2sq, int128_t l4p4) {
  const int128_t l2p4 = static_cast<int128_t>(l2sq) * l2sq;
  return static_cast<double>(l4p4 - l2p4) / static_cast<double>(l2p4);
}

SweepRow base_row(int theorem, const CellContext& ctx) {
  SweepRow row;
  row.theorem = theorem;
  row.n = ctx.m.n();
  row.p_min = ctx.m.p_min();
  row.omega = ctx.m.omega();
  row.phi = ctx.m.phi();
  row.psi = ctx.m.psi();
  row.r = ctx.r;
  row.f_r = ctx.f_r;
  return row;
}

void fill_measurement(SweepRow& row, const TernarySequence& rotated, int128_t l4p4_exact,
                      double tolerance) {
  row.l2sq = l2_squared(rotated);
  row.l4p4_exact = l4p4_exact;
  row.l4p4_dft = l4_fourth_power_dft(rotated);
  row.merit = merit_factor(row.l2sq, l4p4_exact);
  if (row.merit) row.abs_gap = std::abs(*row.merit - row.f_r);
  const double exact = static_cast<double>(l4p4_exact);
  row.dft_ok = std::abs(exact - *row.l4p4_dft) <= tolerance * std::max(1.0, exact);
}

void record_prop4(SweepRow& row, const Prop4Gap& gap) {
  ++row.prop4_checked;
  if (!gap.holds()) ++row.prop4_violations;
  row.prop4_worst_ratio = std::max(row.prop4_worst_ratio, gap.lhs / gap.rhs);
}

TernarySequence build_completion(const FactoredModulus& m, CompletionKind kind,
                                 std::uint64_t seed) {
  switch (kind) {
    case CompletionKind::plus_one:
    case CompletionKind::all_ones: return completion_all_ones(m);
    case CompletionKind::minus_one: return completion_constant(m, -1);
    case CompletionKind::jacobi_product: return completion_jacobi_product(m);
    case CompletionKind::two_prime: {
      if (m.omega() != 2) {
        throw ConfigError("two_prime completion needs omega(n) = 2, n=" + std::to_string(m.n()));
      }
      return completion_two_prime(m.prime_factors()[1], m.prime_factors()[0]);
    }
    case CompletionKind::random: return completion_random(m, seed);
    case CompletionKind::exhaustive: break;
  }
  throw ConfigError("completion '" + std::string(to_string(kind)) +
                    "' does not name a single polynomial");
}

struct CompletionMeasurement {
  SweepRow row;
  int128_t l4p4_v;
};

CompletionMeasurement measure_completion(int theorem, const CellContext& ctx,
                                         const TernarySequence& v, std::string label,
                                         std::optional<std::uint64_t> seed, double tolerance) {
  const auto v_rot = rotate_by(v, ctx.shift);
  const auto total = complete(ctx.j_rot, v_rot);
  const int128_t l4_total = l4_fourth_power_exact(total);
  const int128_t l4_v = l4_fourth_power_exact(v_rot);

  SweepRow row = base_row(theorem, ctx);
  row.completion = std::move(label);
  row.seed = seed;
  fill_measurement(row, total, l4_total, tolerance);
  row.reference_gap =
      std::abs(inverse_merit(row.l2sq, l4_total) - ctx.scaled_inverse_merit_j());
  record_prop4(row, ctx.prop4.gap(l4_total, ctx.l4p4_j, l4_v));
  return {std::move(row), l4_v};
}

std::uint64_t sample_seed(std::uint64_t master, std::int64_t index) {
  return master + static_cast<std::uint64_t>(index);
}

std::string sign_word(std::uint64_t mask, std::int64_t psi) {
  std::string word(static_cast<std::size_t>(psi), '-');
  for (std::int64_t i = 0; i < psi; ++i) {
    if ((mask >> (psi - 1 - i)) & 1U) word[i] = '+';
  }
  return word;
}

// Expands the config into cells and runs `body` on each, collecting rows
// in cell order.
SweepResult run_cells(const SweepConfig& cfg,
                      const std::function<std::vector<SweepRow>(const CellContext&)>& body) {
  cfg.validate();
  std::vector<FactoredModulus> moduli;
  moduli.reserve(cfg.n_list.size());
  for (auto n : cfg.n_list) moduli.push_back(factor_odd_squarefree(n));

  std::vector<Cell> cells;
  for (const auto& m : moduli) {
    for (const auto& r : cfg.r_grid) cells.push_back({&m, r});
  }
  std::vector<std::vector<SweepRow>> per_cell(cells.size());
  std::vector<std::string> errors(cells.size());
  parallel_for(cells.size(), cfg.workers, [&](std::size_t i) {
    try {
      CellContext ctx(*cells[i].modulus, cells[i].r);
      per_cell[i] = body(ctx);
    } catch (const std::exception& e) {
      errors[i] = "n=" + std::to_string(cells[i].modulus->n()) + " r=" + cells[i].r.str() +
                  ": " + e.what();
    }
  });

  SweepResult result;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (auto& row : per_cell[i]) result.rows.push_back(std::move(row));
    if (!errors[i].empty()) result.errors.push_back(std::move(errors[i]));
  }
  return result;
}

void require(const SweepConfig& cfg, CompletionKind kind, int theorem) {
  if (!cfg.has(kind)) {
    throw ConfigError("theorem " + std::to_string(theorem) + " sweep needs completion '" +
                      std::string(to_string(kind)) + "'");
  }
}

// Named single-polynomial completions in cfg, in cfg order.
std::vector<CompletionKind> named_completions(const SweepConfig& cfg) {
  std::vector<CompletionKind> out;
  for (auto k : cfg.completions) {
    if (k != CompletionKind::random && k != CompletionKind::exhaustive) out.push_back(k);
  }
  return out;
}

struct ScanSummary {
  std::uint64_t count = 0;
  std::uint64_t best_mask = 0;
  int128_t best_l4 = std::numeric_limits<int128_t>::max();
  std::uint64_t worst_mask = 0;
  int128_t worst_l4 = std::numeric_limits<int128_t>::min();
  std::uint64_t prop4_violations = 0;
  double prop4_worst_ratio = 0.0;
};

// Max F is min l4 (all completions share l2sq = n); ties go to the smaller
// mask so the result does not depend on visit order.
ScanSummary scan_summary(const CellContext& ctx,
                         const std::function<void(const CompletionSample&)>& extra = {}) {
  ScanSummary s;
  scan_completions(ctx.m, ctx.shift, [&](const CompletionSample& c) {
    ++s.count;
    if (c.l4p4_total < s.best_l4 || (c.l4p4_total == s.best_l4 && c.mask < s.best_mask)) {
      s.best_l4 = c.l4p4_total;
      s.best_mask = c.mask;
    }
    if (c.l4p4_total > s.worst_l4 || (c.l4p4_total == s.worst_l4 && c.mask < s.worst_mask)) {
      s.worst_l4 = c.l4p4_total;
      s.worst_mask = c.mask;
    }
    const auto gap = ctx.prop4.gap(c.l4p4_total, ctx.l4p4_j, c.l4p4_v);
    if (!gap.holds()) ++s.prop4_violations;
    s.prop4_worst_ratio = std::max(s.prop4_worst_ratio, gap.lhs / gap.rhs);
    if (extra) extra(c);
  });
  return s;
}

}  // namespace

SweepResult run_theorem2(const SweepConfig& cfg) {
  return run_cells(cfg, [&](const CellContext& ctx) {
    SweepRow row = base_row(2, ctx);
    row.completion = "none";
    fill_measurement(row, ctx.j_rot, ctx.l4p4_j, cfg.dft_tolerance);
    const double n = static_cast<double>(ctx.m.n());
    row.aux1 = std::abs(static_cast<double>(ctx.l4p4_j) / (n * n) - 1.0 - 1.0 / ctx.f_r);
    if (row.merit) row.aux2 = std::abs(1.0 / *row.merit - 1.0 / ctx.f_r);
    return std::vector<SweepRow>{std::move(row)};
  });
}

SweepResult run_theorem3(const SweepConfig& cfg) {
  require(cfg, CompletionKind::all_ones, 3);
  const auto kinds = named_completions(cfg);
  return run_cells(cfg, [&](const CellContext& ctx) {
    const double n = static_cast<double>(ctx.m.n());
    const double p = static_cast<double>(ctx.m.p_min());
    const double spike = n / (2.0 * p * p * p);
    const double density = static_cast<double>(ctx.m.phi()) / n;
    std::vector<SweepRow> rows;
    for (auto kind : kinds) {
      auto [row, l4_v] = measure_completion(3, ctx, build_completion(ctx.m, kind, cfg.seed),
                                            std::string(to_string(kind)), std::nullopt,
                                            cfg.dft_tolerance);
      const double inv_f = inverse_merit(row.l2sq, *row.l4p4_exact);
      row.aux1 = spike;
      row.aux2 = inv_f;
      if (kind == CompletionKind::all_ones) {
        const double lower = ctx.scaled_inverse_merit_j() +
                             spike * std::pow(density, 4) - ctx.prop4.rhs(l4_v);
        row.row_check = inv_f >= lower;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  });
}

SweepResult run_theorem4_bound(const SweepConfig& cfg) {
  return run_cells(cfg, [&](const CellContext& ctx) {
    SweepRow row = base_row(4, ctx);
    if (ctx.m.psi() <= kMaxEnumerationPsi) {
      const auto s = scan_summary(ctx);
      const auto v = completion_from_mask(ctx.m, s.best_mask);
      const auto total = complete(ctx.j_rot, rotate_by(v, ctx.shift));
      row.completion = "max_exhaustive:" + sign_word(s.best_mask, ctx.m.psi());
      fill_measurement(row, total, s.best_l4, cfg.dft_tolerance);
      row.aux2 = static_cast<double>(s.count);
      row.prop4_checked = s.count;
      row.prop4_violations = s.prop4_violations;
      row.prop4_worst_ratio = s.prop4_worst_ratio;
    } else {
      std::optional<CompletionMeasurement> best;
      SweepRow tally;
      for (std::int64_t i = 0; i < cfg.samples; ++i) {
        const auto seed = sample_seed(cfg.seed, i);
        auto meas = measure_completion(4, ctx, completion_random(ctx.m, seed), "max_sampled",
                                       seed, cfg.dft_tolerance);
        tally.prop4_checked += meas.row.prop4_checked;
        tally.prop4_violations += meas.row.prop4_violations;
        tally.prop4_worst_ratio = std::max(tally.prop4_worst_ratio, meas.row.prop4_worst_ratio);
        if (!best || *meas.row.l4p4_exact < *best->row.l4p4_exact) best = std::move(meas);
      }
      row = std::move(best->row);
      row.aux2 = static_cast<double>(cfg.samples);
      row.prop4_checked = tally.prop4_checked;
      row.prop4_violations = tally.prop4_violations;
      row.prop4_worst_ratio = tally.prop4_worst_ratio;
    }
    if (row.merit) row.aux1 = ctx.f_r - *row.merit;
    return std::vector<SweepRow>{std::move(row)};
  });
}

SweepResult run_theorem5(const SweepConfig& cfg) {
  require(cfg, CompletionKind::random, 5);
  return run_cells(cfg, [&](const CellContext& ctx) {
    std::vector<SweepRow> rows;
    std::vector<double> values;
    const double n = static_cast<double>(ctx.m.n());
    SweepRow summary = base_row(5, ctx);
    for (std::int64_t i = 0; i < cfg.samples; ++i) {
      const auto seed = sample_seed(cfg.seed, i);
      auto [row, l4_v] = measure_completion(5, ctx, completion_random(ctx.m, seed), "random",
                                            seed, cfg.dft_tolerance);
      row.aux1 = static_cast<double>(l4_v) / (n * n);
      if (row.merit) {
        row.aux2 = std::abs(1.0 / *row.merit - 1.0 / ctx.f_r);
        values.push_back(*row.merit);
      }
      rows.push_back(std::move(row));
    }
    summary.completion = "random_summary";
    summary.seed = cfg.seed;
    summary.l2sq = ctx.m.n();
    if (!values.empty()) {
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      double var = 0.0;
      double worst = 0.0;
      for (double v : values) {
        var += (v - mean) * (v - mean);
        worst = std::max(worst, std::abs(v - ctx.f_r));
      }
      var = values.size() > 1 ? var / static_cast<double>(values.size() - 1) : 0.0;
      summary.merit = mean;
      summary.abs_gap = std::abs(mean - ctx.f_r);
      summary.aux1 = std::sqrt(var);
      summary.aux2 = worst;
    }
    rows.push_back(std::move(summary));
    return rows;
  });
}

SweepResult run_theorem6(const SweepConfig& cfg) {
  require(cfg, CompletionKind::jacobi_product, 6);
  const auto kinds = named_completions(cfg);
  return run_cells(cfg, [&](const CellContext& ctx) {
    const double n = static_cast<double>(ctx.m.n());
    std::vector<SweepRow> rows;
    for (auto kind : kinds) {
      auto [row, l4_v] = measure_completion(6, ctx, build_completion(ctx.m, kind, cfg.seed),
                                            std::string(to_string(kind)), std::nullopt,
                                            cfg.dft_tolerance);
      row.aux1 = static_cast<double>(l4_v) / (n * n);
      if (row.merit) row.aux2 = std::abs(1.0 / *row.merit - 1.0 / ctx.f_r);
      rows.push_back(std::move(row));
    }
    return rows;
  });
}

SweepResult run_theorem7_exhaustive(const SweepConfig& cfg) {
  for (auto n : cfg.n_list) {
    if (is_odd_squarefree(n) && factor_odd_squarefree(n).psi() > kMaxEnumerationPsi) {
      throw ConfigError("theorem 7 enumerates V_n and needs psi(n) <= 24; n=" +
                        std::to_string(n) + " is too large");
    }
  }
  auto kinds = named_completions(cfg);
  return run_cells(cfg, [&](const CellContext& ctx) {
    const std::int64_t psi = ctx.m.psi();
    const double n = static_cast<double>(ctx.m.n());
    const int128_t n_sq = static_cast<int128_t>(ctx.m.n()) * ctx.m.n();

    struct Named {
      std::string label;
      TernarySequence total;
      int128_t l4;
      std::uint64_t below = 0;     // completions with strictly smaller F
      std::uint64_t not_above = 0; // completions with F <= this F
    };
    std::vector<Named> named;
    for (auto kind : kinds) {
      if (kind == CompletionKind::two_prime && ctx.m.omega() != 2) continue;
      const auto v = build_completion(ctx.m, kind, cfg.seed);
      const auto total = complete(ctx.j_rot, rotate_by(v, ctx.shift));
      const int128_t l4 = l4_fourth_power_exact(total);
      named.push_back({std::string(to_string(kind)), total, l4});
    }

    const bool per_completion = cfg.per_completion_rows && psi <= 20;
    std::vector<std::pair<std::uint64_t, int128_t>> all;
    if (per_completion) all.reserve(std::size_t{1} << psi);

    const auto s = scan_summary(ctx, [&](const CompletionSample& c) {
      for (auto& x : named) {
        if (c.l4p4_total > x.l4) ++x.below;
        if (c.l4p4_total >= x.l4) ++x.not_above;
      }
      if (per_completion) all.emplace_back(c.mask, c.l4p4_total);
    });

    const auto best_f = merit_factor(ctx.m.n(), s.best_l4);
    const auto worst_f = merit_factor(ctx.m.n(), s.worst_l4);
    const double spread = (best_f && worst_f) ? *best_f - *worst_f : 0.0;
    const double rel_spread = best_f ? spread / *best_f : 0.0;

    std::vector<SweepRow> rows;
    auto extreme_row = [&](const char* tag, std::uint64_t mask, int128_t l4) {
      SweepRow row = base_row(7, ctx);
      const auto total =
          complete(ctx.j_rot, rotate_by(completion_from_mask(ctx.m, mask), ctx.shift));
      row.completion = std::string(tag) + ":" + sign_word(mask, psi);
      fill_measurement(row, total, l4, cfg.dft_tolerance);
      row.aux1 = spread;
      row.aux2 = rel_spread;
      return row;
    };
    SweepRow max_row = extreme_row("exhaustive_max", s.best_mask, s.best_l4);
    max_row.prop4_checked = s.count;
    max_row.prop4_violations = s.prop4_violations;
    max_row.prop4_worst_ratio = s.prop4_worst_ratio;
    rows.push_back(std::move(max_row));
    rows.push_back(extreme_row("exhaustive_min", s.worst_mask, s.worst_l4));

    const double count = static_cast<double>(s.count);
    for (const auto& x : named) {
      SweepRow row = base_row(7, ctx);
      row.completion = x.label;
      fill_measurement(row, x.total, x.l4, cfg.dft_tolerance);
      row.aux1 = static_cast<double>(x.below) / count;
      row.aux2 = static_cast<double>(x.not_above) / count;
      rows.push_back(std::move(row));
    }
    if (per_completion) {
      std::sort(all.begin(), all.end());
      for (const auto& [mask, l4] : all) {
        SweepRow row = base_row(7, ctx);
        row.completion = "mask:" + sign_word(mask, psi);
        row.l2sq = ctx.m.n();
        row.l4p4_exact = l4;
        row.merit = merit_factor(row.l2sq, l4);
        if (row.merit) row.abs_gap = std::abs(*row.merit - ctx.f_r);
        row.aux1 = static_cast<double>(l4 - n_sq) / (n * n);
        rows.push_back(std::move(row));
      }
    }
    return rows;
  });
}

SweepResult run_sweep(int theorem, const SweepConfig& cfg) {
  switch (theorem) {
    case 2: return run_theorem2(cfg);
    case 3: return run_theorem3(cfg);
    case 4: return run_theorem4_bound(cfg);
    case 5: return run_theorem5(cfg);
    case 6: return run_theorem6(cfg);
    case 7: return run_theorem7_exhaustive(cfg);
    default: break;
  }
  throw ConfigError("theorem must be one of 2..7, got " + std::to_string(theorem));
}

MeritReport merit_for(const FactoredModulus& m, const Rational& r,
                      std::optional<CompletionKind> kind, std::uint64_t seed) {
  const CellContext ctx(m, r);
  if (!kind) {
    auto rep = measure(ctx.j_rot, r, "none");
    return rep;
  }
  const auto v = build_completion(m, *kind, seed);
  const auto total = complete(ctx.j_rot, rotate_by(v, ctx.shift));
  auto rep = measure(total, r, std::string(to_string(*kind)),
                     *kind == CompletionKind::random ? std::optional(seed) : std::nullopt);
  rep.gap = std::abs(inverse_merit(rep.l2sq, rep.l4p4_exact) - ctx.scaled_inverse_merit_j());
  return rep;
}

// ---------------------------------------------------------------------------
// Identity verification

bool VerifyReport::ok() const noexcept {
  return std::all_of(tallies.begin(), tallies.end(),
                     [](const IdentityTally& t) { return t.failed == 0; });
}

const IdentityTally* VerifyReport::find(std::string_view name) const noexcept {
  for (const auto& t : tallies) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { t_.name = std::move(name); }

  // error <= tolerance passes; `what` is built only on failure.
  template <class Describe>
  void check(double error, double tolerance, Describe&& what) {
    ++t_.checked;
    t_.worst_error = std::max(t_.worst_error, error);
    if (!(error <= tolerance)) {
      if (t_.failed++ == 0) t_.first_failure = what();
    }
  }

  IdentityTally release() { return std::move(t_); }

 private:
  IdentityTally t_;
};

std::string tuple(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string s = "(";
  for (const auto& [k, v] : fields) {
    if (s.size() > 1) s += ", ";
    s += k;
    s += "=";
    s += v;
  }
  return s + ")";
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

VerifyReport verify_identities(const std::vector<std::int64_t>& n_list,
                               const VerifyOptions& options) {
  std::vector<FactoredModulus> moduli;
  for (auto n : n_list) {
    try {
      moduli.push_back(factor_odd_squarefree(n));
    } catch (const InadmissibleModulus& e) {
      throw ConfigError(std::string("inadmissible n: ") + e.what());
    }
  }
  const std::vector<Rational> rotations{{0}, {1, 4}, {-1, 3}, {1, 2}, {3, 8}};

  Tally ramanujan("ramanujan_sum");
  Tally gauss("gauss_sum");
  Tally charsum("character_sum");
  Tally spectral("spectral_values_J");
  Tally magnitude("spectral_magnitude_J");
  Tally expsum("exp_sum_identity");
  Tally spike("allones_spike");
  Tally interp("interpolation_bound");
  Tally jcircle("character_circle_bound");
  Tally prop4("completion_gap_bound");
  Tally vbound("norm_V_r_bound");
  Tally l4l2("l4_l2_max");
  Tally hj("hj_decomposition");

  for (const auto& m : moduli) {
    const std::int64_t n = m.n();
    const double root_n = std::sqrt(static_cast<double>(n));
    const std::string ns = std::to_string(n);

    for (std::int64_t u = 0; u < n; ++u) {
      const auto r = ramanujan_sum_check(u, m);
      ramanujan.check(r.error(), 1e-9, [&] {
        return tuple({{"n", ns}, {"u", std::to_string(u)}, {"closed", num(r.closed.real())},
                      {"direct", num(r.direct.real())}});
      });
      const auto g = gauss_sum_check(u, m, options.symbol);
      gauss.check(g.error(), 1e-9, [&] {
        return tuple({{"n", ns}, {"j", std::to_string(u)}, {"error", num(g.error())}});
      });
      const auto c = character_sum_check(u, m, options.symbol);
      charsum.check(static_cast<double>(std::abs(c.lhs - c.rhs)), 0.0, [&] {
        return tuple({{"n", ns}, {"u", std::to_string(u)}, {"lhs", std::to_string(c.lhs)},
                      {"rhs", std::to_string(c.rhs)}});
      });
    }

    const auto j = character_polynomial(m);
    for (const auto& r : rotations) {
      const auto closed = spectral_values_J(m, Rotation{r});
      const auto j_rot = rotate(j, Rotation{r});
      const auto direct = evaluate_on_roots(j_rot.coeffs(), j.size());
      for (std::int64_t k = 0; k < n; ++k) {
        spectral.check(std::abs(closed[k] - direct[k]), 1e-9 * root_n, [&] {
          return tuple({{"n", ns}, {"r", r.str()}, {"j", std::to_string(k)}});
        });
        const double expected = gcd(k, n) == 1 ? static_cast<double>(n) : 0.0;
        magnitude.check(std::abs(std::norm(direct[k]) - expected), 1e-9 * n, [&] {
          return tuple({{"n", ns}, {"r", r.str()}, {"j", std::to_string(k)}});
        });
      }
      const auto ib = interpolation_bound_check(j_rot);
      interp.check(std::max(0.0, ib.max_circle_estimate - ib.bound), 0.0, [&] {
        return tuple({{"n", ns}, {"r", r.str()}, {"poly", "J_r"}});
      });
      jcircle.check(std::max(0.0, ib.max_circle_estimate - character_circle_bound(n)), 0.0,
                    [&] { return tuple({{"n", ns}, {"r", r.str()}}); });
    }

    const auto sp = allones_spike_check(m);
    for (const auto& s : sp.values) {
      spike.check(std::abs(s.value - Complex(sp.expected, 0.0)), 1e-9, [&] {
        return tuple({{"n", ns}, {"u", std::to_string(s.u)}, {"value", num(s.value.real())},
                      {"expected", num(sp.expected)}});
      });
    }

    std::vector<std::pair<std::string, TernarySequence>> completions;
    completions.emplace_back("all_ones", completion_all_ones(m));
    completions.emplace_back("minus_one", completion_constant(m, -1));
    completions.emplace_back("jacobi_product", completion_jacobi_product(m));
    if (m.omega() == 2) {
      completions.emplace_back("two_prime",
                               completion_two_prime(m.prime_factors()[1], m.prime_factors()[0]));
    }
    for (std::uint64_t i = 0; i < 3; ++i) {
      completions.emplace_back("random:" + std::to_string(options.seed + i),
                               completion_random(m, options.seed + i));
    }
    const double psi_cubed = std::pow(static_cast<double>(m.psi()), 3);
    for (const auto& [label, v] : completions) {
      for (const auto& r : {Rational(0), Rational(1, 4), Rational(1, 2)}) {
        const Rotation rot{r};
        const auto j_rot = rotate(j, rot);
        const auto v_rot = rotate(v, rot);
        const auto total = complete(j_rot, v_rot);
        const auto gap = proposition4_gap(m, l4_fourth_power_exact(total),
                                          l4_fourth_power_exact(j_rot),
                                          l4_fourth_power_exact(v_rot));
        prop4.check(gap.holds() ? 0.0 : gap.lhs - gap.rhs, 0.0, [&] {
          return tuple({{"n", ns}, {"V", label}, {"r", r.str()}, {"lhs", num(gap.lhs)},
                        {"rhs", num(gap.rhs)}});
        });
        vbound.check(std::max(0.0, static_cast<double>(gap.l4p4_v) - psi_cubed), 0.0, [&] {
          return tuple({{"n", ns}, {"V", label}, {"r", r.str()}});
        });
        for (const auto* poly : {&j_rot, &v_rot, &total}) {
          const auto lm = l4_l2_max_check(*poly);
          l4l2.check(std::max(0.0, lm.l4p4 - lm.bound * (1.0 + 1e-6)), 0.0, [&] {
            return tuple({{"n", ns}, {"V", label}, {"r", r.str()}, {"l4p4", num(lm.l4p4)},
                          {"bound", num(lm.bound)}});
          });
        }
        const auto ib = interpolation_bound_check(total);
        interp.check(std::max(0.0, ib.max_circle_estimate - ib.bound), 0.0, [&] {
          return tuple({{"n", ns}, {"V", label}, {"r", r.str()}, {"poly", "J_r+V_r"}});
        });
        if (n <= kDefaultDecompositionMaxN) {
          const auto d = hj_decomposition(total);
          const double exact = static_cast<double>(l4_fourth_power_exact(total)) /
                               (static_cast<double>(n) * static_cast<double>(n));
          hj.check(std::abs(d.total - exact) / exact, 1e-8, [&] {
            return tuple({{"n", ns}, {"V", label}, {"r", r.str()}});
          });
        }
      }
    }
  }

  std::int64_t exp_max = options.exp_sum_max_n;
  std::vector<std::int64_t> exp_ns;
  for (std::int64_t n = 2; n <= exp_max; ++n) exp_ns.push_back(n);
  for (const auto& m : moduli) {
    if (m.n() > exp_max) exp_ns.push_back(m.n());
  }
  for (auto n : exp_ns) {
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    for (std::int64_t jj = -n; jj <= n; ++jj) {
      const auto e = exp_sum_identity_check(jj, n);
      expsum.check(std::max(std::abs(e.lhs - e.rhs), e.imag_residual), 1e-9 * n2, [&] {
        return tuple({{"n", std::to_string(n)}, {"j", std::to_string(jj)}, {"lhs", num(e.lhs)},
                      {"rhs", num(e.rhs)}});
      });
    }
  }

  VerifyReport report;
  for (auto* t : {&ramanujan, &gauss, &charsum, &spectral, &magnitude, &expsum, &spike, &interp,
                  &jcircle, &prop4, &vbound, &l4l2, &hj}) {
    report.tallies.push_back(t->release());
  }
  return report;
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& t : report.tallies) {
    out << (t.failed == 0 ? "PASS " : "FAIL ") << t.name << ": " << t.checked << " checked, "
        << t.failed << " failed, worst error " << num(t.worst_error);
    if (t.failed) out << "; first failure " << t.first_failure;
    out << '\n';
  }
}

}  // namespace littlewood
