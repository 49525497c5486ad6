// littlewood: construct character polynomials and their completions, measure
// merit factors, run the theorem sweeps and the identity suite.
//
// Exit codes: 0 success, 1 identity failure, 2 invalid config.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "littlewood/decomposition.hpp"
#include "littlewood/experiments.hpp"

namespace lw = littlewood;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitConfig = 2;

struct CommonArgs {
  std::int64_t n = 0;
  std::string n_list;
  std::string r;
  bool r_grid = false;
  std::string completion;
  std::uint64_t seed = 1;
  std::int64_t samples = 50;
  unsigned workers = 1;
  std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--n", a.n, "odd square-free modulus");
  cmd->add_option("--n-list", a.n_list, "comma-separated moduli, or lo..hi for every odd square-free n in range");
  cmd->add_option("--r", a.r, "rotation p/q, or a comma-separated list");
  cmd->add_flag("--r-grid", a.r_grid, "use the grid {k/64 : k = -31..32}");
  cmd->add_option("--completion", a.completion, "comma-separated completion kinds");
  cmd->add_option("--seed", a.seed, "master seed");
  cmd->add_option("--samples", a.samples, "random completions per cell");
  cmd->add_option("--workers", a.workers, "worker threads");
  cmd->add_option("--out", a.out, "output file (stdout if omitted)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  const auto v = std::stoll(s, &used);
  if (used != s.size()) throw lw::ConfigError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::int64_t> moduli(const CommonArgs& a) {
  std::vector<std::int64_t> out;
  if (a.n != 0) out.push_back(a.n);
  for (const auto& part : split(a.n_list, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(part));
    } else {
      for (auto n : lw::odd_squarefree_range(parse_int(part.substr(0, dots)),
                                             parse_int(part.substr(dots + 2)))) {
        out.push_back(n);
      }
    }
  }
  return out;
}

std::vector<lw::Rational> rotations(const CommonArgs& a, bool grid_by_default) {
  std::vector<lw::Rational> out;
  if (a.r_grid || (a.r.empty() && grid_by_default)) out = lw::default_r_grid();
  for (const auto& part : split(a.r, ',')) out.push_back(lw::Rational::parse(part));
  if (out.empty()) out.emplace_back(0);
  return out;
}

std::vector<lw::CompletionKind> completions(const std::string& text) {
  std::vector<lw::CompletionKind> out;
  for (const auto& part : split(text, ',')) out.push_back(lw::parse_completion_kind(part));
  return out;
}

// Completions a theorem sweep uses when --completion is absent.
std::vector<lw::CompletionKind> default_completions(int theorem,
                                                    const std::vector<std::int64_t>& ns) {
  using K = lw::CompletionKind;
  switch (theorem) {
    case 3: return {K::all_ones, K::jacobi_product, K::minus_one};
    case 5: return {K::random};
    case 6: return {K::jacobi_product, K::all_ones};
    case 7: {
      std::vector<K> kinds{K::all_ones, K::jacobi_product};
      bool all_two = !ns.empty();
      for (auto n : ns) {
        all_two = all_two && lw::is_odd_squarefree(n) && lw::factor_odd_squarefree(n).omega() == 2;
      }
      if (all_two) kinds.push_back(K::two_prime);
      return kinds;
    }
    default: return {};
  }
}

// Opens --out, or hands back std::cout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw lw::ConfigError("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

lw::SweepConfig sweep_config(const CommonArgs& a, int theorem) {
  lw::SweepConfig cfg;
  cfg.n_list = moduli(a);
  cfg.r_grid = rotations(a, true);
  cfg.completions = a.completion.empty() ? default_completions(theorem, cfg.n_list)
                                         : completions(a.completion);
  cfg.seed = a.seed;
  cfg.samples = a.samples;
  cfg.workers = a.workers;
  cfg.output_path = a.out;
  return cfg;
}

// Writes the CSV and reports anything that should fail the run.
int finish_sweep(const lw::SweepResult& result, const std::string& out_path) {
  Output out(out_path);
  lw::write_csv(out.stream(), result.rows);

  std::uint64_t prop4_checked = 0;
  std::uint64_t prop4_violations = 0;
  double worst = 0.0;
  int status = kExitOk;
  for (const auto& row : result.rows) {
    prop4_checked += row.prop4_checked;
    prop4_violations += row.prop4_violations;
    worst = std::max(worst, row.prop4_worst_ratio);
    if (!row.dft_ok) {
      std::cerr << "dft mismatch: n=" << row.n << " r=" << row.r.str() << " " << row.completion
                << '\n';
      status = kExitIdentity;
    }
    if (!row.row_check) {
      std::cerr << "row inequality fails: n=" << row.n << " r=" << row.r.str() << " "
                << row.completion << '\n';
      status = kExitIdentity;
    }
  }
  for (const auto& e : result.errors) {
    std::cerr << "error: " << e << '\n';
    status = kExitIdentity;
  }
  if (prop4_checked > 0) {
    std::cerr << "gap bound: " << prop4_checked << " checked, " << prop4_violations
              << " violated, worst lhs/rhs " << worst << '\n';
    if (prop4_violations > 0) status = kExitIdentity;
  }
  std::cerr << result.rows.size() << " rows\n";
  return status;
}

void print_report(std::ostream& out, const lw::MeritReport& rep) {
  out << "n " << rep.n << '\n'
      << "r " << rep.r.str() << '\n'
      << "completion " << rep.completion_label << '\n'
      << "l2sq " << rep.l2sq << '\n'
      << "l4p4_exact " << lw::to_string(rep.l4p4_exact) << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", rep.l4p4_dft);
  out << "l4p4_dft " << buf << '\n';
  if (rep.merit) {
    std::snprintf(buf, sizeof buf, "%.17g", *rep.merit);
    out << "F " << buf << '\n';
  } else {
    out << "F undefined\n";
  }
  std::snprintf(buf, sizeof buf, "%.17g", rep.f_of_r);
  out << "f_r " << buf << '\n';
  if (rep.gap) out << "gap " << *rep.gap << '\n';
}

lw::TernarySequence build(const lw::FactoredModulus& m, const lw::Rational& r,
                          const std::string& completion, std::uint64_t seed) {
  const lw::Rotation rot{r};
  const auto j = lw::rotate(lw::character_polynomial(m), rot);
  if (completion.empty() || completion == "none") return j;
  const auto kind = lw::parse_completion_kind(completion);
  std::optional<lw::TernarySequence> v;
  switch (kind) {
    case lw::CompletionKind::plus_one:
    case lw::CompletionKind::all_ones: v = lw::completion_all_ones(m); break;
    case lw::CompletionKind::minus_one: v = lw::completion_constant(m, -1); break;
    case lw::CompletionKind::jacobi_product: v = lw::completion_jacobi_product(m); break;
    case lw::CompletionKind::two_prime:
      if (m.omega() != 2) throw lw::ConfigError("two_prime needs omega(n) = 2");
      v = lw::completion_two_prime(m.prime_factors()[1], m.prime_factors()[0]);
      break;
    case lw::CompletionKind::random: v = lw::completion_random(m, seed); break;
    case lw::CompletionKind::exhaustive:
      throw lw::ConfigError("exhaustive does not name a single completion");
  }
  return lw::complete(j, lw::rotate(*v, rot));
}

lw::FactoredModulus single_modulus(const CommonArgs& a) {
  const auto ns = moduli(a);
  if (ns.size() != 1) throw lw::ConfigError("give exactly one modulus with --n");
  return lw::factor_odd_squarefree(ns.front());
}

int run_construct(const CommonArgs& a) {
  const auto m = single_modulus(a);
  const auto rs = rotations(a, false);
  if (rs.size() != 1) throw lw::ConfigError("construct takes a single --r");
  Output out(a.out);
  lw::write_sequence(out.stream(), build(m, rs.front(), a.completion, a.seed));
  return kExitOk;
}

int run_merit(const CommonArgs& a, const std::string& in_path, bool decompose,
              std::int64_t hj_max_n) {
  std::vector<lw::MeritReport> reports;
  std::vector<lw::TernarySequence> seqs;
  if (!in_path.empty()) {
    std::ifstream in(in_path);
    if (!in) throw lw::ConfigError("cannot open '" + in_path + "'");
    auto seq = lw::read_sequence(in);
    reports.push_back(lw::measure(seq, lw::Rational(0), "file"));
    seqs.push_back(std::move(seq));
  } else {
    const auto m = single_modulus(a);
    std::optional<lw::CompletionKind> kind;
    if (!a.completion.empty() && a.completion != "none") {
      kind = lw::parse_completion_kind(a.completion);
    }
    for (const auto& r : rotations(a, false)) {
      reports.push_back(lw::merit_for(m, r, kind, a.seed));
      if (decompose) seqs.push_back(build(m, r, a.completion, a.seed));
    }
  }

  if (!a.out.empty()) {
    std::vector<lw::SweepRow> rows;
    for (const auto& rep : reports) {
      lw::SweepRow row;
      row.n = rep.n;
      if (lw::is_odd_squarefree(rep.n)) {
        const auto m = lw::factor_odd_squarefree(rep.n);
        row.p_min = m.p_min();
        row.omega = m.omega();
        row.phi = m.phi();
        row.psi = m.psi();
      }
      row.r = rep.r;
      row.completion = rep.completion_label;
      row.seed = rep.seed;
      row.l2sq = rep.l2sq;
      row.l4p4_exact = rep.l4p4_exact;
      row.l4p4_dft = rep.l4p4_dft;
      row.merit = rep.merit;
      row.f_r = rep.f_of_r;
      if (rep.merit) row.abs_gap = std::abs(*rep.merit - rep.f_of_r);
      row.aux1 = rep.gap;
      rows.push_back(std::move(row));
    }
    Output out(a.out);
    lw::write_csv(out.stream(), rows);
  }

  int status = kExitOk;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (a.out.empty()) {
      if (i) std::cout << '\n';
      print_report(std::cout, reports[i]);
    }
    if (reports[i].dft_relative_error() > 1e-9) {
      std::cerr << "dft mismatch at r=" << reports[i].r.str() << '\n';
      status = kExitIdentity;
    }
    if (decompose) {
      const auto d = lw::hj_decomposition(seqs[i], hj_max_n);
      const double n = static_cast<double>(seqs[i].n());
      const double exact = static_cast<double>(reports[i].l4p4_exact) / (n * n);
      std::ostream& os = a.out.empty() ? std::cout : std::cerr;
      os << "hj main " << d.main_term << "\nhj B " << d.b << "\nhj C " << d.c << "\nhj D "
         << d.d << "\nhj total " << d.total << "\nhj exact " << exact << '\n';
      if (std::abs(d.total - exact) > 1e-8 * exact) status = kExitIdentity;
    }
  }
  return status;
}

int run_verify(const CommonArgs& a, std::int64_t exp_sum_max_n) {
  auto ns = moduli(a);
  if (ns.empty()) ns = lw::odd_squarefree_range(3, 105);
  lw::VerifyOptions options;
  options.seed = a.seed;
  options.exp_sum_max_n = exp_sum_max_n;
  const auto report = lw::verify_identities(ns, options);
  Output out(a.out);
  lw::print_verify_report(out.stream(), report);
  return report.ok() ? kExitOk : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Merit factors of Littlewood completions of character polynomials"};
  app.require_subcommand(1);

  CommonArgs construct_args, merit_args, sweep_args, exhaustive_args, verify_args;

  auto* construct = app.add_subcommand("construct", "write J_r, or J_r + V_r, as a sequence file");
  add_common(construct, construct_args);

  auto* merit = app.add_subcommand("merit", "merit factor of one polynomial");
  add_common(merit, merit_args);
  std::string in_path;
  bool decompose = false;
  std::int64_t hj_max_n = lw::kDefaultDecompositionMaxN;
  merit->add_option("--in", in_path, "sequence file from construct");
  merit->add_flag("--decompose", decompose, "also print the Hoeholdt-Jensen terms");
  merit->add_option("--hj-max-n", hj_max_n, "largest n for --decompose");

  auto* sweep = app.add_subcommand("sweep", "theorem sweep over (n, r, completion)");
  add_common(sweep, sweep_args);
  int theorem = 0;
  sweep->add_option("--theorem", theorem, "theorem number")
      ->required()
      ->check(CLI::Range(2, 7));

  auto* exhaustive = app.add_subcommand("exhaustive", "every completion of J, one row each");
  add_common(exhaustive, exhaustive_args);

  auto* verify = app.add_subcommand("verify", "closed-form identity suite");
  add_common(verify, verify_args);
  std::int64_t exp_sum_max_n = 201;
  verify->add_option("--exp-sum-max-n", exp_sum_max_n, "exp-sum identity range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*construct) return run_construct(construct_args);
    if (*merit) return run_merit(merit_args, in_path, decompose, hj_max_n);
    if (*sweep) {
      const auto cfg = sweep_config(sweep_args, theorem);
      cfg.validate();
      return finish_sweep(lw::run_sweep(theorem, cfg), cfg.output_path);
    }
    if (*exhaustive) {
      auto cfg = sweep_config(exhaustive_args, 7);
      cfg.per_completion_rows = true;
      cfg.validate();
      return finish_sweep(lw::run_theorem7_exhaustive(cfg), cfg.output_path);
    }
    if (*verify) return run_verify(verify_args, exp_sum_max_n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIdentity;
  }
  return kExitOk;
}
