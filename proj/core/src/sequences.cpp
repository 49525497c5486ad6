#include "littlewood/sequences.hpp"

#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

namespace littlewood {

std::string_view to_string(SequenceKind kind) noexcept {
  switch (kind) {
    case SequenceKind::character: return "character";
    case SequenceKind::completion: return "completion";
    case SequenceKind::littlewood: return "littlewood";
    case SequenceKind::other: break;
  }
  return "other";
}

SequenceKind parse_sequence_kind(std::string_view text) {
  if (text == "character") return SequenceKind::character;
  if (text == "completion") return SequenceKind::completion;
  if (text == "littlewood") return SequenceKind::littlewood;
  if (text == "other") return SequenceKind::other;
  throw std::invalid_argument("unknown sequence kind '" + std::string(text) + "'");
}

TernarySequence::TernarySequence(std::vector<std::int8_t> coeffs, SequenceKind kind)
    : coeffs_(std::move(coeffs)), kind_(kind) {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int c = coeffs_[j];
    if (c < -1 || c > 1) {
      throw std::invalid_argument("coefficient " + std::to_string(j) + " = " +
                                  std::to_string(c) + " is outside {-1,0,+1}");
    }
    if (kind_ == SequenceKind::littlewood && c == 0) {
      throw std::invalid_argument("littlewood sequence has a zero at index " +
                                  std::to_string(j));
    }
  }
}

std::int64_t TernarySequence::weight() const noexcept {
  std::int64_t w = 0;
  for (auto c : coeffs_) w += (c != 0);
  return w;
}

Rational::Rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  num = p / g;
  den = q / g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("cannot parse rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text), 1);
  return Rational(parse_int(text.substr(0, slash), text),
                  parse_int(text.substr(slash + 1), text));
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::int64_t floor_mul(std::int64_t n, const Rational& r) {
  const int128_t prod = static_cast<int128_t>(n) * r.num;
  int128_t q = prod / r.den;
  if (prod % r.den != 0 && prod < 0) --q;
  return static_cast<std::int64_t>(q);
}

TernarySequence rotate_by(const TernarySequence& a, std::int64_t shift) {
  const std::int64_t n = a.n();
  if (n == 0) return a;
  const std::int64_t s = mod_floor(shift, n);
  std::vector<std::int8_t> out(a.size());
  auto in = a.coeffs();
  for (std::int64_t k = 0; k < n; ++k) {
    std::int64_t src = k + s;
    if (src >= n) src -= n;
    out[k] = in[src];
  }
  return TernarySequence(std::move(out), a.kind());
}

TernarySequence rotate(const TernarySequence& a, const Rotation& rot) {
  return rotate_by(a, rot.shift(a.n()));
}

TernarySequence character_polynomial(const FactoredModulus& m) {
  const std::int64_t n = m.n();
  std::vector<std::int8_t> c(n);
  for (std::int64_t j = 0; j < n; ++j) c[j] = static_cast<std::int8_t>(jacobi(j, n));
  return TernarySequence(std::move(c), SequenceKind::character);
}

std::vector<std::int64_t> free_indices(const FactoredModulus& m) {
  std::vector<std::int64_t> out;
  out.reserve(m.psi());
  for (std::int64_t j = 0; j < m.n(); ++j) {
    if (gcd(j, m.n()) > 1) out.push_back(j);
  }
  return out;
}

TernarySequence completion_constant(const FactoredModulus& m, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  std::vector<std::int8_t> c(m.n(), 0);
  for (auto j : free_indices(m)) c[j] = static_cast<std::int8_t>(sign);
  return TernarySequence(std::move(c), SequenceKind::completion);
}

TernarySequence completion_all_ones(const FactoredModulus& m) {
  return completion_constant(m, +1);
}

TernarySequence completion_jacobi_product(const FactoredModulus& m) {
  const std::int64_t n = m.n();
  std::vector<std::int8_t> c(n, 0);
  for (std::int64_t j = 0; j < n; ++j) {
    const std::int64_t g = gcd(j, n);
    if (g > 1) c[j] = static_cast<std::int8_t>(jacobi(j, n / g));
  }
  return TernarySequence(std::move(c), SequenceKind::completion);
}

TernarySequence completion_two_prime(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || !is_prime(q) || p % 2 == 0 || q % 2 == 0) {
    throw std::invalid_argument("two-prime completion needs odd primes, got p=" +
                                std::to_string(p) + ", q=" + std::to_string(q));
  }
  if (p <= q) {
    throw std::invalid_argument("two-prime completion needs p > q, got p=" +
                                std::to_string(p) + ", q=" + std::to_string(q));
  }
  const std::int64_t n = p * q;
  std::vector<std::int8_t> c(n, 0);
  for (std::int64_t j = 0; j < p; ++j) c[j * q] = 1;
  for (std::int64_t j = 1; j < q; ++j) c[j * p] = -1;
  return TernarySequence(std::move(c), SequenceKind::completion);
}

TernarySequence completion_random(const FactoredModulus& m, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::int8_t> c(m.n(), 0);
  for (auto j : free_indices(m)) c[j] = (gen() >> 63) ? 1 : -1;
  return TernarySequence(std::move(c), SequenceKind::completion);
}

TernarySequence completion_from_mask(const FactoredModulus& m, std::uint64_t mask) {
  const auto free = free_indices(m);
  const auto psi = free.size();
  std::vector<std::int8_t> c(m.n(), 0);
  for (std::size_t i = 0; i < psi; ++i) {
    c[free[i]] = ((mask >> (psi - 1 - i)) & 1U) ? 1 : -1;
  }
  return TernarySequence(std::move(c), SequenceKind::completion);
}

std::string completion_sign_word(const FactoredModulus& m, const TernarySequence& v) {
  std::string word;
  for (auto j : free_indices(m)) word.push_back(v[j] > 0 ? '+' : '-');
  return word;
}

CompletionEnumerator::CompletionEnumerator(const FactoredModulus& m) : modulus_(m) {
  if (m.psi() > kMaxEnumerationPsi) {
    throw std::invalid_argument(
        "refusing to enumerate 2^" + std::to_string(m.psi()) + " completions of n=" +
        std::to_string(m.n()) + ": cost is exponential in psi(n), limit is psi <= " +
        std::to_string(kMaxEnumerationPsi));
  }
  count_ = std::uint64_t{1} << m.psi();
}

std::optional<TernarySequence> CompletionEnumerator::next() {
  if (mask_ >= count_) return std::nullopt;
  return completion_from_mask(modulus_, mask_++);
}

TernarySequence complete(const TernarySequence& j, const TernarySequence& v) {
  if (j.size() != v.size()) {
    throw std::invalid_argument("complete: length mismatch " + std::to_string(j.size()) +
                                " vs " + std::to_string(v.size()));
  }
  std::vector<std::int8_t> out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    if ((j[k] != 0) == (v[k] != 0)) {
      throw std::invalid_argument("complete: supports are not complementary at index " +
                                  std::to_string(k));
    }
    out[k] = static_cast<std::int8_t>(j[k] + v[k]);
  }
  return TernarySequence(std::move(out), SequenceKind::littlewood);
}

bool in_completion_set(const FactoredModulus& m, const TernarySequence& v) {
  if (v.n() != m.n()) return false;
  for (std::int64_t j = 0; j < m.n(); ++j) {
    if ((v[j] != 0) != (gcd(j, m.n()) > 1)) return false;
  }
  return true;
}

void write_sequence(std::ostream& out, const TernarySequence& a) {
  out << a.n() << ' ' << to_string(a.kind()) << '\n';
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j) out << ' ';
    out << a[j];
  }
  out << '\n';
}

TernarySequence read_sequence(std::istream& in) {
  std::int64_t n = 0;
  std::string kind;
  if (!(in >> n >> kind) || n < 0) {
    throw std::invalid_argument("sequence header must be 'n kind'");
  }
  std::vector<std::int8_t> c(n);
  for (std::int64_t j = 0; j < n; ++j) {
    int v = 0;
    if (!(in >> v)) {
      throw std::invalid_argument("sequence truncated after " + std::to_string(j) +
                                  " of " + std::to_string(n) + " entries");
    }
    if (v < -1 || v > 1) {
      throw std::invalid_argument("entry " + std::to_string(j) + " = " +
                                  std::to_string(v) + " is outside {-1,0,+1}");
    }
    c[j] = static_cast<std::int8_t>(v);
  }
  return TernarySequence(std::move(c), parse_sequence_kind(kind));
}

}  // namespace littlewood
