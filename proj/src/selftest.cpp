#include "nroot/selftest.hpp"

#include <fmt/format.h>

#include <cmath>
#include <random>

#include "nroot/commands.hpp"
#include "nroot/engine.hpp"
#include "nroot/oracle.hpp"
#include "nroot/recursion.hpp"
#include "nroot/spectral.hpp"

namespace nroot::selftest {

namespace {

GroupResult table_group() {
  const char* expected[] = {"1/1", "3/2", "7/5", "17/12", "41/29", "99/70"};
  const auto rec = commands::cmd_table(Params(2, 2), {});
  const auto& rows = rec.tables.at(0).rows;
  bool ok = rows.size() == 6;
  std::string got;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    got += (i ? " " : "") + rows[i][1].text;
    if (ok && rows[i][1].text != expected[i]) ok = false;
  }
  return {"table-reproduction", ok, got};
}

GroupResult cayley_hamilton_group() {
  int checked = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    for (long k : {1, 2, 3, 5, 10, 16}) {
      const Params p(n, k);
      const MatrixN shifted = engine::build_companion(p) - MatrixN::identity(n);
      if (!(engine::mat_pow(shifted, n, engine::PowerMethod::naive) == ExactInt(k) * MatrixN::identity(n)))
        return {"cayley-hamilton", false, fmt::format("fails at n={} k={}", n, k)};
      ++checked;
    }
  }
  return {"cayley-hamilton", true, fmt::format("{} cases, n<=6", checked)};
}

GroupResult engine_group(const Hooks& hooks) {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<unsigned> pick_n(2, 6);
  std::uniform_int_distribution<long> pick_k(1, 20);
  std::uniform_int_distribution<std::uint64_t> pick_t(0, 50);
  std::uniform_int_distribution<long> pick_entry(-9, 9);

  int agreed = 0;
  while (agreed < 50) {
    const Params p(pick_n(rng), pick_k(rng));
    const std::uint64_t t = pick_t(rng);
    std::vector<ExactInt> entries(p.n());
    for (auto& e : entries) e = pick_entry(rng);
    try {
      const StateVector r0(entries);
      const auto naive = engine::apply_power_matrix(p, t, r0, engine::PowerMethod::naive);
      const auto binary = engine::apply_power_matrix(p, t, r0, engine::PowerMethod::binary);
      const auto ring = hooks.ring_apply(p, t, r0);
      if (!(naive == binary) || !(naive == ring))
        return {"engine-agreement", false,
                fmt::format("n={} k={} t={} R0={}: naive {} ring {}", p.n(), to_string(p.k()), t, r0.str(),
                            naive.str(), ring.str())};
      ++agreed;
    } catch (const ZeroVector&) {
      // all-zero draw or collapse through a singular Pi_n; not a comparison case
    }
  }
  return {"engine-agreement", true, fmt::format("{} random cases", agreed)};
}

GroupResult rate_group() {
  const double predicted = spectral::convergence_rate(Params(2, 2)).digits_per_step;
  const double measured = measured_digits_per_step(Params(2, 2), 50, 150);
  const bool ok = std::fabs(measured - predicted) <= 0.05 * predicted;
  return {"rate-law", ok, fmt::format("measured {:.6f} predicted {:.6f}", measured, predicted)};
}

}  // namespace

Hooks default_hooks() { return Hooks{&engine::apply_power}; }

double measured_digits_per_step(const Params& params, std::uint64_t t_begin, std::uint64_t t_end) {
  const auto rate = spectral::convergence_rate(params);
  const auto precision = static_cast<unsigned>(std::ceil(rate.digits_per_step * static_cast<double>(t_end))) + 60;
  const auto bracket = oracle::nth_root_bracket(params, precision);
  const auto traj = recursion::iterate_linear(params, ones_vector(params.n()), t_end);
  const double e0 = oracle::log10_error(recursion::ratio(traj.states[t_begin], 1), bracket);
  const double e1 = oracle::log10_error(recursion::ratio(traj.states[t_end], 1), bracket);
  return (e0 - e1) / static_cast<double>(t_end - t_begin);
}

std::vector<GroupResult> run(const Hooks& hooks) {
  std::vector<GroupResult> out;
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  guarded("table-reproduction", table_group);
  guarded("cayley-hamilton", cayley_hamilton_group);
  guarded("engine-agreement", [&] { return engine_group(hooks); });
  guarded("rate-law", rate_group);
  return out;
}

std::string report(const std::vector<GroupResult>& results) {
  std::string out;
  for (const auto& r : results) out += fmt::format("{} {} ({})\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
  return out;
}

bool all_passed(const std::vector<GroupResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace nroot::selftest
