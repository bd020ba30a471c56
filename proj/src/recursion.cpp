#include "nroot/recursion.hpp"

namespace nroot::recursion {

namespace {

// Pi_n * v without materializing the matrix.
std::vector<ExactInt> step_linear(const Params& params, const std::vector<ExactInt>& v) {
  const std::size_t n = v.size();
  std::vector<ExactInt> out(n);
  out[0] = v[0] + params.k() * v[n - 1];
  for (std::size_t i = 1; i < n; ++i) out[i] = v[i] + v[i - 1];
  return out;
}

}  // namespace

Trajectory iterate_linear(const Params& params, const StateVector& r0, std::uint64_t t_max) {
  if (r0.size() != params.n())
    throw InvalidArgument("initial vector has " + std::to_string(r0.size()) + " entries, expected " +
                          std::to_string(params.n()));
  Trajectory traj{params, r0, {}};
  traj.states.reserve(t_max + 1);
  traj.states.emplace_back(r0.entries(), 0);
  for (std::uint64_t t = 1; t <= t_max; ++t)
    traj.states.emplace_back(step_linear(params, traj.states.back().entries()), t);
  return traj;
}

ExactRat ratio(const StateVector& state, std::size_t i) {
  if (i < 1 || i + 1 > state.size())
    throw InvalidArgument("ratio index " + std::to_string(i) + " outside 1.." + std::to_string(state.size() - 1));
  const ExactInt& den = state.at1(i + 1);
  if (den == 0)
    throw DivisionByZero("ratio R_{t," + std::to_string(i) + "}/R_{t," + std::to_string(i + 1) +
                         "} has zero denominator at t=" + std::to_string(state.t()) + " in state " + state.str());
  return ExactRat(state.at1(i), den);
}

ExactRat scalar_step(const Params& params, const ExactRat& r, std::uint64_t t) {
  const ExactRat denom = r.pow(params.n() - 1) + ExactRat(1);
  if (denom.is_zero()) throw PoleEncountered(t, r.str());
  return (r + ExactRat(params.k())) / denom;
}

ScalarTrajectory iterate_scalar_map(const Params& params, const ExactRat& r0, std::uint64_t steps) {
  ScalarTrajectory traj{params, {r0}};
  traj.ratios.reserve(steps + 1);
  for (std::uint64_t t = 0; t < steps; ++t) traj.ratios.push_back(scalar_step(params, traj.ratios.back(), t));
  return traj;
}

}  // namespace nroot::recursion
