#include <cstdio>
#include <ostream>

#include "littlewood/experiments.hpp"

namespace littlewood {
namespace {

// %.17g round-trips doubles and is stable across runs.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

}  // namespace

std::string csv_header() {
  return "schema_id,theorem,n,p_min,omega,phi,psi,r_num,r_den,completion,seed,l2sq,"
         "l4p4_exact,l4p4_dft,F,f_r,abs_gap,aux1,aux2";
}

std::string format_csv_row(const SweepRow& row) {
  std::string s;
  s.reserve(256);
  auto put = [&s](const std::string& field) {
    if (!s.empty()) s.push_back(',');
    s += field;
  };
  put(std::string(kCsvSchemaId));
  put(std::to_string(row.theorem));
  put(std::to_string(row.n));
  put(std::to_string(row.p_min));
  put(std::to_string(row.omega));
  put(std::to_string(row.phi));
  put(std::to_string(row.psi));
  put(std::to_string(row.r.num));
  put(std::to_string(row.r.den));
  put(row.completion);
  put(row.seed ? std::to_string(*row.seed) : std::string());
  put(std::to_string(row.l2sq));
  put(row.l4p4_exact ? to_string(*row.l4p4_exact) : std::string());
  put(fmt(row.l4p4_dft));
  put(fmt(row.merit));
  put(fmt(row.f_r));
  put(fmt(row.abs_gap));
  put(fmt(row.aux1));
  put(fmt(row.aux2));
  return s;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << csv_header() << '\n';
  for (const auto& row : rows) out << format_csv_row(row) << '\n';
}

}  // namespace littlewood
