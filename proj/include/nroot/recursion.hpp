#pragma once

#include <cstdint>
#include <vector>

#include "nroot/core.hpp"

namespace nroot::recursion {

/// States R_0 .. R_tmax of the linear system R_{t+1} = Pi_n R_t.
struct Trajectory {
  Params params;
  StateVector origin;
  std::vector<StateVector> states;
};

/// Ratios r_0 .. r_steps of the scalar map r <- (r + k) / (r^(n-1) + 1).
struct ScalarTrajectory {
  Params params;
  std::vector<ExactRat> ratios;
};

/// One multiplication by Pi_n per step. Throws ZeroVector naming the first collapsed t.
Trajectory iterate_linear(const Params& params, const StateVector& r0, std::uint64_t t_max);

/// R_{t,i} / R_{t,i+1} with 1-based i. Throws DivisionByZero when R_{t,i+1} = 0.
ExactRat ratio(const StateVector& state, std::size_t i);

/// One step of the scalar map. Throws PoleEncountered (reported at `t`).
ExactRat scalar_step(const Params& params, const ExactRat& r, std::uint64_t t = 0);

ScalarTrajectory iterate_scalar_map(const Params& params, const ExactRat& r0, std::uint64_t steps);

}  // namespace nroot::recursion
