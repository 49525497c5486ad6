#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "littlewood/numbers.hpp"

namespace littlewood {

enum class SequenceKind { character, completion, littlewood, other };

std::string_view to_string(SequenceKind kind) noexcept;
SequenceKind parse_sequence_kind(std::string_view text);

/// Coefficients a_0..a_{n-1} of a polynomial with entries in {-1, 0, +1}.
///
/// The constructor checks the entry range, and that a `littlewood` sequence
/// has no zero entry. Kind-specific support invariants that depend on a
/// modulus (character, completion) are established by the constructors below.
class TernarySequence {
 public:
  TernarySequence(std::vector<std::int8_t> coeffs, SequenceKind kind);

  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t n() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
  SequenceKind kind() const noexcept { return kind_; }
  std::span<const std::int8_t> coeffs() const noexcept { return coeffs_; }
  int operator[](std::size_t j) const noexcept { return coeffs_[j]; }
  /// Number of nonzero coefficients, i.e. the squared L2 norm on the circle.
  std::int64_t weight() const noexcept;

  friend bool operator==(const TernarySequence&, const TernarySequence&) = default;

 private:
  std::vector<std::int8_t> coeffs_;
  SequenceKind kind_;
};

/// Exact rational p/q with q > 0 in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t p, std::int64_t q = 1);

  /// Parses "p/q" or an integer "p".
  static Rational parse(std::string_view text);
  std::string str() const;
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// floor(n * r) computed exactly.
std::int64_t floor_mul(std::int64_t n, const Rational& r);

/// Rotation parameter r. Only the integer shift R = floor(n r) acts on a
/// length-n sequence; r is kept for reporting.
struct Rotation {
  Rational r;

  std::int64_t shift(std::int64_t n) const { return floor_mul(n, r); }
};

/// z^{-R} A(z) mod (z^n - 1): output coefficient k is input coefficient
/// (k + R) mod n.
TernarySequence rotate(const TernarySequence& a, const Rotation& rot);
TernarySequence rotate_by(const TernarySequence& a, std::int64_t shift);

/// J(z) = sum_j (j | n) z^j.
TernarySequence character_polynomial(const FactoredModulus& m);

/// Indices j in [0, n) with gcd(j, n) > 1, ascending. These are the free
/// coefficients of a completion; there are psi(n) of them.
std::vector<std::int64_t> free_indices(const FactoredModulus& m);

/// V with +1 at every j where gcd(j, n) > 1.
TernarySequence completion_all_ones(const FactoredModulus& m);

/// V with v_j = (j | n / gcd(j, n)) where gcd(j, n) > 1.
///
/// At j = 0 the modulus is n / n = 1 and the symbol (0 | 1) is the empty
/// product +1; any other value would leave a zero in J + V.
TernarySequence completion_jacobi_product(const FactoredModulus& m);

/// Two-prime completion for n = p q, p > q:
/// sum_{j<p} z^{jq} - sum_{1<=j<q} z^{jp}.
TernarySequence completion_two_prime(std::int64_t p, std::int64_t q);

/// +1 / -1 on the free indices, fixed sign.
TernarySequence completion_constant(const FactoredModulus& m, int sign);

/// Uniform member of V_n: each free coefficient is an independent fair sign
/// drawn from std::mt19937_64 seeded with `seed`.
TernarySequence completion_random(const FactoredModulus& m, std::uint64_t seed);

/// Member of V_n encoded by a sign word: bit (psi - 1 - i) of `mask` gives
/// the sign of the i-th free index (1 -> +1, 0 -> -1). Counting `mask` up
/// from 0 walks V_n in lexicographic order of the sign word (- before +).
TernarySequence completion_from_mask(const FactoredModulus& m, std::uint64_t mask);

/// Sign word of a completion as a string over {'+', '-'} in increasing j.
std::string completion_sign_word(const FactoredModulus& m, const TernarySequence& v);

/// Largest psi(n) accepted by the exhaustive enumeration.
inline constexpr std::int64_t kMaxEnumerationPsi = 24;

/// Single-pass stream over all 2^psi members of V_n in lexicographic order
/// of their sign word. Throws std::invalid_argument when psi(n) > 24.
class CompletionEnumerator {
 public:
  explicit CompletionEnumerator(const FactoredModulus& m);

  std::uint64_t count() const noexcept { return count_; }
  std::optional<TernarySequence> next();

 private:
  FactoredModulus modulus_;
  std::uint64_t count_;
  std::uint64_t mask_ = 0;
};

/// J + V. Throws std::invalid_argument on a length mismatch or when the
/// supports overlap.
TernarySequence complete(const TernarySequence& j, const TernarySequence& v);

/// True iff the support of v is exactly {j : gcd(j, n) > 1}.
bool in_completion_set(const FactoredModulus& m, const TernarySequence& v);

/// Plain-text form: a header line "n kind", then n space-separated entries.
void write_sequence(std::ostream& out, const TernarySequence& a);
TernarySequence read_sequence(std::istream& in);

}  // namespace littlewood
