// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nroot/commands.hpp"
#include "nroot/engine.hpp"
#include "nroot/oracle.hpp"
#include "nroot/recursion.hpp"
#include "nroot/spectral.hpp"

using namespace nroot;

namespace {

struct Verdict {
  bool passed;
  std::string detail;
};

Verdict table_reproduction() {
  const std::vector<std::string> expected{"1/1", "3/2", "7/5", "17/12", "41/29", "99/70"};
  const auto rec = commands::cmd_table(Params(2, 2), {.t0 = 0, .t1 = 5});
  std::vector<std::string> got;
  for (const auto& row : rec.tables.at(0).rows) got.push_back(row.at(1).text);
  return {got == expected, fmt::format("fractions: {}", fmt::join(got, " "))};
}

Verdict cayley_hamilton() {
  int cases = 0;
  for (unsigned n = 2; n <= 8; ++n) {
    for (long k : {1, 2, 3, 5, 10, 16}) {
      const Params p(n, k);
      const MatrixN id = MatrixN::identity(n);
      const MatrixN lhs = engine::mat_pow(engine::build_companion(p) - id, n, engine::PowerMethod::naive);
      if (!(lhs == ExactInt(k) * id)) return {false, fmt::format("(Pi - I)^n != kI at n={} k={}", n, k)};
      ++cases;
    }
  }
  return {true, fmt::format("{} (n,k) pairs exact", cases)};
}

Verdict coefficient_chain() {
  for (long k : {2L, 3L, 7L}) {
    const Params p(2, k);
    const std::vector<std::pair<std::uint64_t, std::vector<ExactInt>>> expected{
        {2, {ExactInt(k - 1), ExactInt(2)}},
        {3, {ExactInt(2 * (k - 1)), ExactInt(k + 3)}},
        {5, {ExactInt(4 * (k * k - 1)), ExactInt(k * k + 10 * k + 5)}},
    };
    for (const auto& [t, coeffs] : expected) {
      const auto got = engine::pi_basis_coeffs(p, t).coeffs;
      if (got != coeffs)
        return {false, fmt::format("k={} t={}: got ({}, {})", k, t, to_string(got[0]), to_string(got[1]))};
    }
  }
  return {true, "t in {2,3,5} x k in {2,3,7}"};
}

Verdict engine_agreement() {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<unsigned> pick_n(2, 6);
  std::uniform_int_distribution<long> pick_k(1, 20);
  std::uniform_int_distribution<std::uint64_t> pick_t(0, 50);
  std::uniform_int_distribution<long> pick_entry(-9, 9);
  int agreed = 0, aborted = 0;
  while (agreed < 200) {
    const Params p(pick_n(rng), pick_k(rng));
    const std::uint64_t t = pick_t(rng);
    std::vector<ExactInt> entries(p.n());
    for (auto& e : entries) e = pick_entry(rng);
    try {
      const StateVector r0(entries);
      const auto naive = engine::apply_power_matrix(p, t, r0, engine::PowerMethod::naive);
      const auto binary = engine::apply_power_matrix(p, t, r0, engine::PowerMethod::binary);
      const auto ring = engine::apply_power(p, t, r0);
      if (!(naive == binary && naive == ring))
        return {false, fmt::format("n={} k={} t={} R0={}", p.n(), to_string(p.k()), t, r0.str())};
      ++agreed;
    } catch (const ZeroVector&) {
      ++aborted;
    }
  }
  return {true, fmt::format("{} cases agree ({} zero-vector draws skipped)", agreed, aborted)};
}

// log10 |ratio_1(R_t) - k^(1/n)| for t = 0..t_max from the all-ones start.
std::vector<double> log_errors(const Params& p, std::uint64_t t_max, unsigned precision) {
  const auto bracket = oracle::nth_root_bracket(p, precision);
  const auto traj = recursion::iterate_linear(p, ones_vector(p.n()), t_max);
  std::vector<double> out;
  for (const auto& s : traj.states) out.push_back(oracle::log10_error(recursion::ratio(s, 1), bracket));
  return out;
}

Verdict rate_law() {
  std::string detail;
  bool ok = true;
  {
    const double predicted = -std::log10(3.0 - 2.0 * std::sqrt(2.0));
    const auto e = log_errors(Params(2, 2), 150, 200);
    const double measured = (e[50] - e[150]) / 100.0;
    const bool pass = std::fabs(measured - predicted) <= 0.05 * predicted;
    ok = ok && pass;
    detail += fmt::format("(2,2) digits/step {:.5f} vs {:.5f}", measured, predicted);
  }
  for (auto [n, k] : {std::pair{3u, 2L}, {5u, 7L}}) {
    const Params p(n, k);
    const double rho = spectral::convergence_rate(p).rho;
    const auto e = log_errors(p, 150, 120);
    const double geo = std::pow(10.0, (e[150] - e[50]) / 100.0);
    const bool pass = std::fabs(geo - rho) <= 0.10 * rho;
    ok = ok && pass;
    detail += fmt::format("; ({},{}) ratio {:.5f} vs rho {:.5f}", n, k, geo, rho);
  }
  return {ok, detail};
}

Verdict certified_convergence() {
  bool ok = true;
  std::string detail;
  for (auto [n, k] : {std::pair{2u, 2L}, {3u, 2L}, {3u, 17L}, {5u, 7L}}) {
    const Params p(n, k);
    const auto state = engine::apply_power(p, 400, ones_vector(n));
    const auto bracket = oracle::nth_root_bracket(p, 45);
    unsigned worst = 40;
    for (std::size_t i = 1; i < n; ++i) worst = std::min(worst, oracle::digits_of_accuracy(recursion::ratio(state, i), bracket, 40));
    ok = ok && worst >= 40;
    detail += fmt::format("{}({},{}) min digits {}", detail.empty() ? "" : "; ", n, k, worst);
  }
  return {ok, detail};
}

Verdict negative_root_exclusion() {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<long> pick(-50, 50);
  int runs = 0, aborted = 0;
  for (long k : {2L, 3L, 5L}) {
    const Params p(2, k);
    const auto pos = oracle::nth_root_bracket(p, 45);
    const ExactRat neg_mid = -pos.midpoint();
    for (int trial = 0; trial < 1000; ++trial) {
      long x = 0, y = 0;
      while (x == 0 && y == 0) {
        x = pick(rng);
        y = pick(rng);
      }
      const auto traj = recursion::iterate_linear(p, StateVector({ExactInt(x), ExactInt(y)}), 200);
      try {
        for (std::uint64_t t = 50; t <= 200; ++t) {
          const ExactRat r = recursion::ratio(traj.states[t], 1);
          if (!((r - neg_mid).abs() > ExactRat(1)))
            return {false, fmt::format("k={} start=({},{}) within 1 of -sqrt(k) at t={}", k, x, y, t)};
        }
        const unsigned d = oracle::digits_of_accuracy(recursion::ratio(traj.states[200], 1), pos, 40);
        if (d < 20) return {false, fmt::format("k={} start=({},{}) only {} digits at t=200", k, x, y, d)};
        ++runs;
      } catch (const DivisionByZero&) {
        ++aborted;
      }
    }
  }
  return {true, fmt::format("{} trajectories converge to +sqrt(k), {} aborted", runs, aborted)};
}

Verdict system_distinctness() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 60), pick_k(1, 20);
  int equal = 0, poles = 0;
  while (equal < 100) {
    const Params p(2, pick_k(rng));
    const ExactRat r0(num(rng), den(rng));
    const StateVector start({r0.num(), r0.den()});
    std::vector<ExactRat> scalar;
    try {
      scalar = recursion::iterate_scalar_map(p, r0, 30).ratios;
    } catch (const PoleEncountered& e) {
      // the linear system must reach a zero denominator one step later
      bool matched = false;
      try {
        recursion::ratio(recursion::iterate_linear(p, start, e.t() + 1).states.back(), 1);
      } catch (const DivisionByZero&) {
        matched = true;
      } catch (const ZeroVector&) {
        matched = true;
      }
      if (!matched) return {false, fmt::format("pole at t={} for r0={} without linear counterpart", e.t(), r0.str())};
      ++poles;
      continue;
    }
    const auto lin = recursion::iterate_linear(p, start, 30);
    for (std::size_t t = 0; t <= 30; ++t)
      if (!(scalar[t] == recursion::ratio(lin.states[t], 1)))
        return {false, fmt::format("n=2 k={} r0={} differs at t={}", to_string(p.k()), r0.str(), t)};
    ++equal;
  }
  const auto scalar = recursion::iterate_scalar_map(Params(3, 2), ExactRat(1), 2).ratios[2];
  const auto linear = recursion::ratio(recursion::iterate_linear(Params(3, 2), ones_vector(3), 2).states[2], 1);
  const bool differ = scalar == ExactRat(14, 13) && linear == ExactRat(7, 5);
  return {differ, fmt::format("n=2: {} starts equal ({} poles matched); n=3 k=2 t=2: {} vs {}", equal, poles,
                              scalar.str(), linear.str())};
}

Verdict spectral_fidelity() {
  double worst_char = 0, worst_decomp = 0, worst_pred = 0;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (unsigned n = 2; n <= 6; ++n) {
    for (long k = 1; k <= 20; ++k) {
      const Params p(n, k);
      for (const auto& pair : spectral::eigenvalues(p).pairs)
        worst_char = std::max(worst_char, std::abs(spectral::characteristic_value(p, pair.value)));
      for (int trial = 0; trial < 2; ++trial) {
        std::vector<ExactInt> e(n, ExactInt(1));
        if (trial == 1)
          for (auto& x : e) x = entry(rng);
        if (std::all_of(e.begin(), e.end(), [](const ExactInt& x) { return x == 0; })) e[0] = 1;
        const StateVector r0(e);
        const auto d = spectral::decompose(p, r0);
        worst_decomp = std::max(worst_decomp, d.residual);
        std::vector<StateVector> states;
        try {
          states = recursion::iterate_linear(p, r0, 30).states;
        } catch (const ZeroVector&) {
          continue;
        }
        for (std::uint64_t t = 0; t <= 30; ++t) {
          const auto pred = spectral::predict(d, t);
          double diff = 0, scale = 0;
          for (unsigned i = 0; i < n; ++i) {
            diff = std::max(diff, std::abs(pred[i] - states[t][i].get_d()));
            scale = std::max(scale, std::abs(states[t][i].get_d()));
          }
          worst_pred = std::max(worst_pred, diff / scale);
        }
      }
    }
  }
  const bool ok = worst_char < 1e-9 && worst_decomp < 1e-9 && worst_pred < 1e-6;
  return {ok, fmt::format("max |P(lambda)| {:.2e}, max decomposition residual {:.2e}, max prediction rel. error {:.2e}",
                          worst_char, worst_decomp, worst_pred)};
}

Verdict oracle_soundness() {
  for (unsigned n = 1; n <= 5; ++n) {
    long r = 0;
    auto pw = [n](long x) {
      long v = 1;
      for (unsigned i = 0; i < n; ++i) v *= x;
      return v;
    };
    for (long m = 0; m < 10000; ++m) {
      while (pw(r + 1) <= m) ++r;
      if (oracle::integer_nth_root(m, n) != r) return {false, fmt::format("m={} n={}", m, n)};
    }
    r = 0;
  }
  for (auto [n, k] : {std::pair{2u, 2L}, {3u, 2L}, {3u, 17L}, {5u, 7L}, {4u, 16L}}) {
    const Params p(n, k);
    auto prev = oracle::nth_root_bracket(p, 0);
    for (unsigned d = 1; d <= 50; ++d) {
      const auto cur = oracle::nth_root_bracket(p, d);
      if (!(cur.lower() >= prev.lower() && cur.upper() <= prev.upper()))
        return {false, fmt::format("brackets do not nest at n={} k={} d={}", n, k, d)};
      prev = cur;
    }
  }
  return {true, "exhaustive m < 10^4, n <= 5; nesting for d <= 50"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"C1 table reproduction", table_reproduction},
      {"C2 Cayley-Hamilton identity", cayley_hamilton},
      {"C3 coefficient chain", coefficient_chain},
      {"C4 engine agreement", engine_agreement},
      {"C5 rate law", rate_law},
      {"C6 certified convergence", certified_convergence},
      {"C7 negative-root exclusion", negative_root_exclusion},
      {"C8 system distinctness", system_distinctness},
      {"C9 spectral fidelity", spectral_fidelity},
      {"C10 oracle soundness", oracle_soundness},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto begin = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - begin).count();
    fmt::print("[{}] {}: {} ({} ms)\n", v.passed ? "PASS" : "FAIL", name, v.detail, ms);
    if (!v.passed) ++failures;
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
