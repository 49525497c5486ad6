#pragma once

#include <cstdint>
#include <functional>

#include "littlewood/norms.hpp"
#include "littlewood/numbers.hpp"

namespace littlewood {

/// One member V of V_n as seen by scan_completions.
struct CompletionSample {
  /// Sign word in the encoding of completion_from_mask().
  std::uint64_t mask;
  /// ||J_r + V_r||_4^4
  int128_t l4p4_total;
  /// ||V_r||_4^4
  int128_t l4p4_v;
};

/// Visits all 2^psi(n) completions of J rotated by `shift`, in Gray-code
/// order. Consecutive completions differ in one sign, so both
/// autocorrelation profiles are updated in O(n) per step instead of being
/// recomputed. Throws std::invalid_argument when psi(n) > kMaxEnumerationPsi.
///
/// Visit order depends only on the modulus, so callers that break ties by
/// mask get results independent of scheduling.
void scan_completions(const FactoredModulus& m, std::int64_t shift,
                      const std::function<void(const CompletionSample&)>& visit);

}  // namespace littlewood
