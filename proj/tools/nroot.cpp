// nroot: rational approximations to k^(1/n) from the Pi_n power iteration.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nroot/commands.hpp"
#include "nroot/errors.hpp"
#include "nroot/selftest.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNonConvergence = 3;

struct Common {
  unsigned n = 2;
  std::string k = "2";
  std::string format = "plain";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "root order n >= 2")->capture_default_str();
  cmd->add_option("--k", c.k, "radicand k >= 1 (any size)")->capture_default_str();
  cmd->add_option("--format", c.format, "plain | csv | json")->capture_default_str();
  cmd->add_option("--out", c.out, "write the payload to FILE instead of stdout");
}

nroot::StateVector parse_start(const std::string& text, unsigned n) {
  std::vector<nroot::ExactInt> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(nroot::parse_int(item));
  if (entries.size() != n)
    throw nroot::InvalidArgument("--start has " + std::to_string(entries.size()) + " entries, expected " +
                                 std::to_string(n));
  return nroot::StateVector(std::move(entries));
}

std::optional<nroot::StateVector> optional_start(const std::string& text, unsigned n) {
  if (text.empty()) return std::nullopt;
  return parse_start(text, n);
}

void emit(const nroot::output::OutputRecord& rec, const Common& c) {
  const std::string payload = nroot::output::render(rec, nroot::output::parse_format(c.format));
  if (c.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw nroot::InvalidArgument("cannot open '" + c.out + "' for writing");
  file << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Rational approximations to k^(1/n) by iterating R_{t+1} = Pi_n R_t, with exact arithmetic.\n"
      "Entry bit-length grows linearly in t (about t*log2(1 + k^(1/n)) bits), so t is bounded only by memory."};
  app.require_subcommand(1);

  Common common;
  std::uint64_t t = 0, t0 = 0, t1 = 5, steps = 5, max_t = nroot::commands::kDefaultMaxT;
  unsigned digits = 10;
  std::size_t index = 1, fib = 0;
  std::string start, mode = "linear";

  auto* approx = app.add_subcommand("approx", "certified approximation to a target number of digits");
  add_common(approx, common);
  approx->add_option("--digits", digits, "target correct decimal digits")->capture_default_str();
  approx->add_option("--index", index, "ratio R_{t,i}/R_{t,i+1} to use")->capture_default_str();
  approx->add_option("--start", start, "initial vector, comma separated (default all ones)");
  approx->add_option("--max-t", max_t, "give up (NonConvergence) beyond this t")->capture_default_str();

  auto* table = app.add_subcommand("table", "ratio table x_t/y_t over a range of t");
  add_common(table, common);
  table->add_option("--t0", t0, "first t")->capture_default_str();
  table->add_option("--t1", t1, "last t")->capture_default_str();
  table->add_option("--index", index, "ratio index i")->capture_default_str();
  table->add_option("--start", start, "initial vector, comma separated (default all ones)");

  auto* trace = app.add_subcommand("trace", "per-step states (linear) or ratios (scalar map)");
  add_common(trace, common);
  trace->add_option("--mode", mode, "linear | scalar")->check(CLI::IsMember({"linear", "scalar"}))->capture_default_str();
  trace->add_option("--start", start, "linear: comma separated vector (default ones); scalar: p/q (default 1)");
  trace->add_option("--steps,--t", steps, "number of steps")->capture_default_str();
  trace->add_option("--digits", digits, "decimal places for scalar ratios")->default_val(6);

  auto* eig = app.add_subcommand("eig", "eigenvalues of Pi_n, dominant pair and convergence rate");
  add_common(eig, common);

  auto* chpow = app.add_subcommand("chpow", "Pi_n^t in the basis I, Pi_n, ..., Pi_n^(n-1)");
  add_common(chpow, common);
  chpow->add_option("--t", t, "exponent")->capture_default_str();
  chpow->add_option("--fib", fib, "also list the Fibonacci exponent chain 2, 3, 5, ... of this length");

  auto* bench = app.add_subcommand("bench", "time the naive, binary and ring power engines");
  add_common(bench, common);
  bench->add_option("--t", t, "exponent")->default_val(1000);

  auto* selftest = app.add_subcommand("selftest", "run the fast acceptance subset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (selftest->parsed()) {
      const auto results = nroot::selftest::run();
      std::cout << nroot::selftest::report(results);
      return nroot::selftest::all_passed(results) ? 0 : kExitNonConvergence;
    }

    const nroot::Params params(common.n, nroot::parse_int(common.k));
    if (approx->parsed()) {
      emit(nroot::commands::cmd_approx(params, {digits, index, max_t, optional_start(start, params.n())}), common);
    } else if (table->parsed()) {
      nroot::commands::TableOptions opts;
      opts.t0 = t0;
      opts.t1 = t1;
      opts.index = index;
      opts.start = optional_start(start, params.n());
      emit(nroot::commands::cmd_table(params, opts), common);
    } else if (trace->parsed()) {
      if (mode == "linear") {
        const auto s = start.empty() ? nroot::ones_vector(params.n()) : parse_start(start, params.n());
        emit(nroot::commands::cmd_trace_linear(params, s, steps), common);
      } else {
        const auto r0 = start.empty() ? nroot::ExactRat(1) : nroot::ExactRat::parse(start);
        emit(nroot::commands::cmd_trace_scalar(params, r0, steps, digits), common);
      }
    } else if (eig->parsed()) {
      emit(nroot::commands::cmd_eig(params), common);
    } else if (chpow->parsed()) {
      emit(nroot::commands::cmd_chpow(params, t, fib), common);
    } else if (bench->parsed()) {
      emit(nroot::commands::cmd_bench(params, t), common);
    }
  } catch (const nroot::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nroot::NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const nroot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
