#pragma once

// Theorem-level experiments over (n, r, completion) grids. Each driver
// returns rows in a fixed order (n_list order, then r_grid order, then a
// per-cell order), independent of the worker count.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "littlewood/identities.hpp"
#include "littlewood/norms.hpp"
#include "littlewood/numbers.hpp"
#include "littlewood/sequences.hpp"

namespace littlewood {

/// Invalid sweep configuration (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CompletionKind {
  plus_one,        // +1 on every free index (J + 1 for prime n)
  minus_one,       // -1 on every free index
  all_ones,        // same polynomial as plus_one, reported under its own label
  jacobi_product,  // v_j = (j | n / gcd(j, n))
  two_prime,       // n = p q only
  random,          // `samples` seeded uniform draws from V_n
  exhaustive,      // all of V_n, psi(n) <= 24
};

std::string_view to_string(CompletionKind kind) noexcept;
CompletionKind parse_completion_kind(std::string_view text);

struct SweepConfig {
  std::vector<std::int64_t> n_list;
  std::vector<Rational> r_grid;
  std::vector<CompletionKind> completions;
  std::uint64_t seed = 1;
  std::int64_t samples = 50;
  unsigned workers = 1;
  std::string output_path;
  /// Largest admissible |exact - dft| / exact before a row is flagged.
  double dft_tolerance = 1e-9;
  /// Emit one row per completion in exhaustive runs (capped at psi <= 20).
  bool per_completion_rows = false;

  bool has(CompletionKind kind) const noexcept;
  /// Throws ConfigError naming the first problem found.
  void validate() const;
};

/// {k/64 : k = -31..32}, covering (-1/2, 1/2].
std::vector<Rational> default_r_grid();

inline constexpr std::string_view kCsvSchemaId = "v1";

/// One CSV row. Fields after aux2 are diagnostics that stay out of the CSV.
struct SweepRow {
  int theorem = 0;
  std::int64_t n = 0;
  std::int64_t p_min = 0;
  int omega = 0;
  std::int64_t phi = 0;
  std::int64_t psi = 0;
  Rational r;
  std::string completion;
  std::optional<std::uint64_t> seed;
  std::int64_t l2sq = 0;
  std::optional<int128_t> l4p4_exact;
  std::optional<double> l4p4_dft;
  std::optional<double> merit;
  double f_r = 0.0;
  std::optional<double> abs_gap;  // |F - f(r)|
  std::optional<double> aux1;
  std::optional<double> aux2;

  /// |1/F - (phi/n)^2 / F(J_r)| where it applies.
  std::optional<double> reference_gap;
  /// Completion gap bound (proposition4_gap) on the completion(s) behind this row.
  std::uint64_t prop4_checked = 0;
  std::uint64_t prop4_violations = 0;
  double prop4_worst_ratio = 0.0;  // max lhs / rhs
  /// Theorem-specific row-wise inequality (theorem 3); true when not applicable.
  bool row_check = true;
  /// exact vs dft agreement within SweepConfig::dft_tolerance.
  bool dft_ok = true;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// One message per failed cell; the sweep continues past failures.
  std::vector<std::string> errors;
};

/// F(J_r) against f(r). aux1 = |l4/n^2 - 1 - 1/f(r)|, aux2 = |1/F - 1/f(r)|.
SweepResult run_theorem2(const SweepConfig& cfg);

/// Completions from cfg (all_ones required). aux1 = n / (2 p_n^3), aux2 = 1/F.
/// row_check: 1/F >= (phi/n)^2/F(J_r) + (n/(2p^3))(phi/n)^4 - prop4 rhs.
SweepResult run_theorem3(const SweepConfig& cfg);

/// Max F over V_n (exhaustive when psi <= 24, else `samples` random draws).
/// aux1 = f(r) - max F, aux2 = completions considered.
SweepResult run_theorem4_bound(const SweepConfig& cfg);

/// `samples` random completions per cell, then a "random_summary" row with
/// F = mean, aux1 = sample std, aux2 = max |F - f(r)|. Per-sample rows carry
/// aux1 = ||V_r||^4/n^2, aux2 = |1/F - 1/f(r)|.
SweepResult run_theorem5(const SweepConfig& cfg);

/// Named completions from cfg (jacobi_product required).
/// aux1 = ||V_r||^4/n^2, aux2 = |1/F - 1/f(r)|.
SweepResult run_theorem6(const SweepConfig& cfg);

/// Exhaustive max/min over V_n with sign words, plus the rank of each named
/// completion. Max/min rows: aux1 = max - min, aux2 = (max - min)/max.
/// Named rows: aux1 = fraction of V_n with smaller F, aux2 = fraction with
/// F not larger.
SweepResult run_theorem7_exhaustive(const SweepConfig& cfg);

/// Dispatch on theorem number 2..7. Throws ConfigError for others.
SweepResult run_sweep(int theorem, const SweepConfig& cfg);

/// MeritReport for one (n, r, completion). `kind` nullopt means J alone.
MeritReport merit_for(const FactoredModulus& m, const Rational& r,
                      std::optional<CompletionKind> kind, std::uint64_t seed = 1);

std::string csv_header();
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string format_csv_row(const SweepRow& row);

struct IdentityTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;
  double worst_error = 0.0;
};

struct VerifyOptions {
  /// Symbol used by the Gauss-sum and character-sum checks.
  JacobiFn symbol = &jacobi;
  /// The exp-sum identity is also checked for every n in [2, this], all |j| <= n.
  std::int64_t exp_sum_max_n = 201;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  std::vector<IdentityTally> tallies;
  bool ok() const noexcept;
  const IdentityTally* find(std::string_view name) const noexcept;
};

/// Runs every closed-form identity and bound over each n (all must be odd
/// square-free; throws ConfigError otherwise).
VerifyReport verify_identities(const std::vector<std::int64_t>& n_list,
                               const VerifyOptions& options = {});

void print_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace littlewood
