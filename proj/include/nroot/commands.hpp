#pragma once

// The operations behind each `nroot` subcommand. Every function is pure and
// returns an OutputRecord; the tool only parses flags and prints.

#include <cstdint>
#include <optional>

#include "nroot/core.hpp"
#include "nroot/output.hpp"

namespace nroot::commands {

inline constexpr std::uint64_t kDefaultMaxT = 1'000'000;
inline constexpr unsigned kTableDigitsCap = 40;
inline constexpr unsigned kTablePlaces = 6;

struct ApproxOptions {
  unsigned target_digits = 10;
  std::size_t index = 1;
  std::uint64_t max_t = kDefaultMaxT;
  std::optional<StateVector> start;  // all-ones when empty
};

/// Smallest certified approximant found by doubling t from the spectral estimate.
output::OutputRecord cmd_approx(const Params& params, const ApproxOptions& options);

struct TableOptions {
  std::uint64_t t0 = 0;
  std::uint64_t t1 = 5;
  std::size_t index = 1;
  std::optional<StateVector> start;
  unsigned digits_cap = kTableDigitsCap;
};

output::OutputRecord cmd_table(const Params& params, const TableOptions& options);

output::OutputRecord cmd_trace_linear(const Params& params, const StateVector& start, std::uint64_t steps);
output::OutputRecord cmd_trace_scalar(const Params& params, const ExactRat& start, std::uint64_t steps,
                                      unsigned places = kTablePlaces);

output::OutputRecord cmd_eig(const Params& params);

/// Pi-basis coefficients of Pi_n^t; `fib` > 0 appends the Fibonacci exponent chain.
output::OutputRecord cmd_chpow(const Params& params, std::uint64_t t, std::size_t fib = 0);

/// Wall-clock timing of the three power engines on the same R_0 = ones.
output::OutputRecord cmd_bench(const Params& params, std::uint64_t t);

/// First t tried by cmd_approx: ceil(target / digits_per_step) plus a fixed burn-in.
std::uint64_t initial_steps(const Params& params, unsigned target_digits);

}  // namespace nroot::commands
