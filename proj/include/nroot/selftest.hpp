#pragma once

// Fast acceptance subset run by `nroot selftest`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nroot/core.hpp"

namespace nroot::selftest {

struct GroupResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Engine paths are injectable so a broken implementation can be shown to fail.
struct Hooks {
  std::function<StateVector(const Params&, std::uint64_t, const StateVector&)> ring_apply;
};

Hooks default_hooks();

std::vector<GroupResult> run(const Hooks& hooks = default_hooks());

/// One "PASS name (detail)" / "FAIL name (detail)" line per group.
std::string report(const std::vector<GroupResult>& results);

bool all_passed(const std::vector<GroupResult>& results);

/// Mean decimal digits gained per step by ratio index 1 between t_begin and t_end,
/// from the all-ones start, errors measured against the exact oracle.
double measured_digits_per_step(const Params& params, std::uint64_t t_begin, std::uint64_t t_end);

}  // namespace nroot::selftest
