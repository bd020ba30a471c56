#pragma once

// Ground truth for k^(1/n) from scaled integer root extraction. Shares no code
// with the engine, recursion or spectral modules.

#include <optional>

#include "nroot/core.hpp"

namespace nroot::oracle {

/// floor(m^(1/n)) by binary search.
ExactInt integer_nth_root(const ExactInt& m, unsigned n);

/// lo / 10^d <= k^(1/n) < (lo + 1) / 10^d
struct RootBracket {
  Params params;
  unsigned digits = 0;
  ExactInt scale;  // 10^digits
  ExactInt lo;

  ExactRat lower() const { return ExactRat(lo, scale); }
  ExactRat upper() const { return ExactRat(lo + 1, scale); }
  ExactRat midpoint() const { return ExactRat(2 * lo + 1, 2 * scale); }
  /// The lower end is the root itself (perfect power).
  bool exact() const;
};

RootBracket nth_root_bracket(const Params& params, unsigned d);

/// Exact m when k = m^n.
std::optional<ExactInt> exact_root(const Params& params);

/// Largest d <= cap with |candidate - k^(1/n)| < 10^-d, 0 when d = 1 already fails.
unsigned digits_of_accuracy(const ExactRat& candidate, const Params& params, unsigned cap);

/// Same, against a bracket the caller already holds (needs bracket.digits >= cap + 5).
unsigned digits_of_accuracy(const ExactRat& candidate, const RootBracket& bracket, unsigned cap);

/// log10 |candidate - k^(1/n)|, the root taken as the bracket midpoint (or the exact root).
double log10_error(const ExactRat& candidate, const RootBracket& bracket);

}  // namespace nroot::oracle
