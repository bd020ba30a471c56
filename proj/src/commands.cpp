#include "nroot/commands.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>

#include "nroot/engine.hpp"
#include "nroot/oracle.hpp"
#include "nroot/recursion.hpp"
#include "nroot/spectral.hpp"

namespace nroot::commands {

using output::Cell;
using output::OutputRecord;
using output::Table;

namespace {

constexpr std::uint64_t kBurnIn = 10;

void add_params(OutputRecord& rec, const Params& params) {
  rec.add_meta("n", Cell::count(params.n()));
  rec.add_meta("k", Cell::str(to_string(params.k())));
}

void check_index(const Params& params, std::size_t index) {
  if (index < 1 || index + 1 > params.n())
    throw InvalidArgument("ratio index " + std::to_string(index) + " outside 1.." + std::to_string(params.n() - 1));
}

std::vector<Cell> ratio_row(std::uint64_t t, const ExactRat& r, unsigned places, unsigned digits) {
  return {Cell::count(t), Cell::str(r.str()), Cell::str(to_decimal(r, places)), Cell::count(digits)};
}

std::string basis_label(std::size_t i) {
  if (i == 0) return "I";
  if (i == 1) return "Pi";
  return "Pi^" + std::to_string(i);
}

}  // namespace

std::uint64_t initial_steps(const Params& params, unsigned target_digits) {
  const auto rate = spectral::convergence_rate(params);
  return static_cast<std::uint64_t>(std::ceil(target_digits / rate.digits_per_step)) + kBurnIn;
}

OutputRecord cmd_approx(const Params& params, const ApproxOptions& options) {
  if (options.target_digits < 1) throw InvalidArgument("target digits must be >= 1");
  check_index(params, options.index);
  const unsigned report_cap = 2 * options.target_digits + 10;

  OutputRecord rec{"approx", {}, {}};
  add_params(rec, params);
  rec.add_meta("target_digits", Cell::count(options.target_digits));
  rec.add_meta("index", Cell::count(options.index));

  std::uint64_t t = 0;
  ExactRat r;
  unsigned achieved = 0;
  bool exact = false;

  if (const auto root = oracle::exact_root(params)) {
    // The dominant eigenvector (m^(n-1), ..., m, 1) is an integer fixed direction.
    std::vector<ExactInt> entries(params.n());
    ExactInt p = 1;
    for (std::size_t i = params.n(); i-- > 0;) {
      entries[i] = p;
      p *= *root;
    }
    r = recursion::ratio(StateVector(std::move(entries)), options.index);
    achieved = oracle::digits_of_accuracy(r, params, report_cap);
    exact = true;
  } else {
    const StateVector start = options.start.value_or(ones_vector(params.n()));
    const oracle::RootBracket bracket = oracle::nth_root_bracket(params, report_cap + 5);
    t = initial_steps(params, options.target_digits);
    while (true) {
      if (t > options.max_t)
        throw NonConvergence("no certified " + std::to_string(options.target_digits) + "-digit approximant up to t=" +
                             std::to_string(options.max_t));
      r = recursion::ratio(engine::apply_power(params, t, start), options.index);
      achieved = oracle::digits_of_accuracy(r, bracket, report_cap);
      if (achieved >= options.target_digits) break;
      t *= 2;
    }
  }

  rec.add_meta("t", Cell::count(t));
  rec.add_meta("achieved_digits", Cell::count(achieved));
  rec.add_meta("exact", Cell::flag(exact));
  rec.add_meta("degenerate", Cell::flag(params.n() == 2 && params.k() == 1));
  rec.tables.push_back(Table{"rows", {"t", "fraction", "decimal", "digits"},
                             {ratio_row(t, r, options.target_digits, achieved)}});
  return rec;
}

OutputRecord cmd_table(const Params& params, const TableOptions& options) {
  if (options.t0 > options.t1) throw InvalidArgument("table range needs t0 <= t1");
  check_index(params, options.index);
  const StateVector start = options.start.value_or(ones_vector(params.n()));
  const auto traj = recursion::iterate_linear(params, start, options.t1);
  const auto bracket = oracle::nth_root_bracket(params, options.digits_cap + 5);

  OutputRecord rec{"table", {}, {}};
  add_params(rec, params);
  rec.add_meta("index", Cell::count(options.index));
  rec.add_meta("start", Cell::str(start.str()));
  Table table{"rows", {"t", "fraction", "decimal", "digits"}, {}};
  for (std::uint64_t t = options.t0; t <= options.t1; ++t) {
    const ExactRat r = recursion::ratio(traj.states[t], options.index);
    table.rows.push_back(ratio_row(t, r, kTablePlaces, oracle::digits_of_accuracy(r, bracket, options.digits_cap)));
  }
  rec.tables.push_back(std::move(table));
  return rec;
}

OutputRecord cmd_trace_linear(const Params& params, const StateVector& start, std::uint64_t steps) {
  const auto traj = recursion::iterate_linear(params, start, steps);
  OutputRecord rec{"trace", {}, {}};
  rec.add_meta("mode", Cell::str("linear"));
  add_params(rec, params);
  rec.add_meta("start", Cell::str(start.str()));
  Table table{"rows", {"t"}, {}};
  for (unsigned i = 1; i <= params.n(); ++i) table.columns.push_back("x" + std::to_string(i));
  for (const auto& s : traj.states) {
    std::vector<Cell> row{Cell::count(s.t())};
    for (const auto& e : s.entries()) row.push_back(Cell::str(to_string(e)));
    table.rows.push_back(std::move(row));
  }
  rec.tables.push_back(std::move(table));
  return rec;
}

OutputRecord cmd_trace_scalar(const Params& params, const ExactRat& start, std::uint64_t steps, unsigned places) {
  const auto traj = recursion::iterate_scalar_map(params, start, steps);
  OutputRecord rec{"trace", {}, {}};
  rec.add_meta("mode", Cell::str("scalar"));
  add_params(rec, params);
  rec.add_meta("start", Cell::str(start.str()));
  Table table{"rows", {"t", "ratio", "decimal"}, {}};
  for (std::size_t t = 0; t < traj.ratios.size(); ++t)
    table.rows.push_back({Cell::count(t), Cell::str(traj.ratios[t].str()), Cell::str(to_decimal(traj.ratios[t], places))});
  rec.tables.push_back(std::move(table));
  return rec;
}

OutputRecord cmd_eig(const Params& params) {
  const auto data = spectral::eigenvalues(params);
  OutputRecord rec{"eig", {}, {}};
  add_params(rec, params);
  const auto& dom = data.dominant();
  rec.add_meta("dominant_index", Cell::count(data.dominant_index));
  rec.add_meta("lambda_d", Cell::number(dom.value.real()));
  std::string vec = "(";
  for (std::size_t i = 0; i < dom.vector.size(); ++i) vec += (i ? "," : "") + Cell::number(dom.vector[i].real()).text;
  rec.add_meta("dominant_vector", Cell::str(vec + ")"));
  rec.add_meta("rho", Cell::number(data.rate));
  try {
    rec.add_meta("digits_per_step", Cell::number(spectral::convergence_rate(params).digits_per_step));
    rec.add_meta("degenerate", Cell::flag(false));
  } catch (const DegenerateRate&) {
    rec.add_meta("degenerate", Cell::flag(true));
  }

  Table table{"eigenvalues", {"j", "re", "im", "modulus", "dominant"}, {}};
  for (std::size_t j = 0; j < data.pairs.size(); ++j) {
    const auto v = data.pairs[j].value;
    table.rows.push_back({Cell::count(j), Cell::number(v.real()), Cell::number(v.imag()), Cell::number(std::abs(v)),
                          Cell::flag(j == data.dominant_index)});
  }
  rec.tables.push_back(std::move(table));
  return rec;
}

OutputRecord cmd_chpow(const Params& params, std::uint64_t t, std::size_t fib) {
  OutputRecord rec{"chpow", {}, {}};
  add_params(rec, params);
  rec.add_meta("t", Cell::count(t));

  const auto coeffs = engine::pi_basis_coeffs(params, t);
  Table basis{"coefficients", {"basis", "coefficient"}, {}, Table::Layout::inline_pairs};
  for (std::size_t i = 0; i < coeffs.coeffs.size(); ++i)
    basis.rows.push_back({Cell::str(basis_label(i)), Cell::str(to_string(coeffs.coeffs[i]))});
  rec.tables.push_back(std::move(basis));

  if (fib > 0) {
    Table chain{"fibonacci_chain", {"exponent"}, {}};
    for (std::size_t i = 0; i < params.n(); ++i) chain.columns.push_back(basis_label(i));
    for (const auto& [exponent, c] : engine::fib_power_chain(params, fib)) {
      std::vector<Cell> row{Cell::count(exponent)};
      for (const auto& a : c.coeffs) row.push_back(Cell::str(to_string(a)));
      chain.rows.push_back(std::move(row));
    }
    rec.tables.push_back(std::move(chain));
  }
  return rec;
}

OutputRecord cmd_bench(const Params& params, std::uint64_t t) {
  using clock = std::chrono::steady_clock;
  const StateVector start = ones_vector(params.n());

  struct Run {
    const char* name;
    StateVector (*fn)(const Params&, std::uint64_t, const StateVector&);
  };
  const Run runs[] = {
      {"naive", [](const Params& p, std::uint64_t s, const StateVector& r) {
         return engine::apply_power_matrix(p, s, r, engine::PowerMethod::naive);
       }},
      {"binary", [](const Params& p, std::uint64_t s, const StateVector& r) {
         return engine::apply_power_matrix(p, s, r, engine::PowerMethod::binary);
       }},
      {"ring", &engine::apply_power},
  };

  OutputRecord rec{"bench", {}, {}};
  add_params(rec, params);
  rec.add_meta("t", Cell::count(t));
  Table table{"rows", {"method", "micros", "max_bits", "agrees"}, {}};
  std::optional<StateVector> reference;
  for (const auto& run : runs) {
    const auto begin = clock::now();
    StateVector result = run.fn(params, t, start);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - begin).count();
    std::size_t bits = 0;
    for (const auto& e : result.entries()) bits = std::max(bits, mpz_sizeinbase(e.get_mpz_t(), 2));
    if (!reference) reference = result;
    table.rows.push_back({Cell::str(run.name), Cell::count(static_cast<long long>(micros)), Cell::count(bits),
                          Cell::flag(result == *reference)});
  }
  rec.tables.push_back(std::move(table));
  return rec;
}

}  // namespace nroot::commands
