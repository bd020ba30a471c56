#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nroot/commands.hpp"
#include "nroot/engine.hpp"
#include "nroot/oracle.hpp"
#include "nroot/recursion.hpp"
#include "nroot/selftest.hpp"
#include "nroot/spectral.hpp"

namespace py = pybind11;
using namespace nroot;

namespace {

// Python ints cross the boundary as decimal strings.
ExactInt to_exact(const py::handle& value) {
  if (!py::isinstance<py::int_>(value)) throw py::type_error("expected an int");
  return parse_int(py::str(value).cast<std::string>());
}

py::int_ to_py(const ExactInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(value).c_str(), nullptr, 10));
}

py::list to_py(const std::vector<ExactInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::list to_py(const MatrixN& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.size(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.size(); ++c) row.append(to_py(m(r, c)));
    rows.append(row);
  }
  return rows;
}

py::object to_fraction(const ExactRat& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(r.num()), to_py(r.den()));
}

ExactRat from_fraction(const py::handle& value) {
  if (py::isinstance<py::int_>(value)) return ExactRat(to_exact(value));
  return ExactRat(to_exact(value.attr("numerator")), to_exact(value.attr("denominator")));
}

StateVector to_state(const py::sequence& seq) {
  std::vector<ExactInt> entries;
  for (const auto& item : seq) entries.push_back(to_exact(item));
  return StateVector(std::move(entries));
}

MatrixN to_matrix(const py::sequence& rows) {
  MatrixN m(py::len(rows));
  std::size_t r = 0;
  for (const auto& row : rows) {
    const auto seq = row.cast<py::sequence>();
    if (py::len(seq) != m.size()) throw InvalidArgument("matrix must be square");
    std::size_t c = 0;
    for (const auto& item : seq) m(r, c++) = to_exact(item);
    ++r;
  }
  return m;
}

Params params(unsigned n, const py::int_& k) { return Params(n, to_exact(k)); }

}  // namespace

PYBIND11_MODULE(_nroot, m) {
  m.doc() = "Exact rational approximations to k^(1/n) from powers of Pi_n";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error);
  py::register_exception<ParamsMismatch>(m, "ParamsMismatch", error);
  py::register_exception<ZeroVector>(m, "ZeroVector", error);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", error);
  py::register_exception<PoleEncountered>(m, "PoleEncountered", error);
  py::register_exception<DegenerateRate>(m, "DegenerateRate", error);
  py::register_exception<IllConditioned>(m, "IllConditioned", error);
  py::register_exception<NonConvergence>(m, "NonConvergence", error);

  m.def("build_companion", [](unsigned n, const py::int_& k) { return to_py(engine::build_companion(params(n, k))); },
        py::arg("n"), py::arg("k"));
  m.def("build_cyclic", [](unsigned n, const py::int_& k) { return to_py(engine::build_cyclic(params(n, k))); },
        py::arg("n"), py::arg("k"));
  m.def(
      "mat_pow",
      [](const py::sequence& a, std::uint64_t t, const std::string& method) {
        if (method != "naive" && method != "binary") throw InvalidArgument("method must be 'naive' or 'binary'");
        return to_py(engine::mat_pow(to_matrix(a), t,
                                     method == "naive" ? engine::PowerMethod::naive : engine::PowerMethod::binary));
      },
      py::arg("a"), py::arg("t"), py::arg("method") = "binary");
  m.def(
      "ring_pow_one_plus_x",
      [](unsigned n, const py::int_& k, std::uint64_t t) {
        return to_py(engine::ring_pow_one_plus_x(params(n, k), t).coeffs());
      },
      py::arg("n"), py::arg("k"), py::arg("t"));
  m.def(
      "apply_power",
      [](unsigned n, const py::int_& k, std::uint64_t t, const py::sequence& start) {
        return to_py(engine::apply_power(params(n, k), t, to_state(start)).entries());
      },
      py::arg("n"), py::arg("k"), py::arg("t"), py::arg("start"));
  m.def(
      "pi_basis_coeffs",
      [](unsigned n, const py::int_& k, std::uint64_t t) { return to_py(engine::pi_basis_coeffs(params(n, k), t).coeffs); },
      py::arg("n"), py::arg("k"), py::arg("t"));
  m.def(
      "fib_power_chain",
      [](unsigned n, const py::int_& k, std::size_t length) {
        py::list out;
        for (const auto& [e, c] : engine::fib_power_chain(params(n, k), length)) out.append(py::make_tuple(e, to_py(c.coeffs)));
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("chain_length"));

  m.def(
      "iterate_linear",
      [](unsigned n, const py::int_& k, const py::sequence& start, std::uint64_t t_max) {
        py::list out;
        for (const auto& s : recursion::iterate_linear(params(n, k), to_state(start), t_max).states)
          out.append(to_py(s.entries()));
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("start"), py::arg("t_max"));
  m.def(
      "ratio", [](const py::sequence& state, std::size_t i) { return to_fraction(recursion::ratio(to_state(state), i)); },
      py::arg("state"), py::arg("i"));
  m.def(
      "iterate_scalar_map",
      [](unsigned n, const py::int_& k, const py::object& r0, std::uint64_t steps) {
        py::list out;
        for (const auto& r : recursion::iterate_scalar_map(params(n, k), from_fraction(r0), steps).ratios)
          out.append(to_fraction(r));
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("r0"), py::arg("steps"));

  m.def(
      "eigenvalues",
      [](unsigned n, const py::int_& k) {
        const auto d = spectral::eigenvalues(params(n, k));
        py::list values, vectors;
        for (const auto& p : d.pairs) {
          values.append(p.value);
          vectors.append(py::cast(p.vector));
        }
        py::dict out;
        out["values"] = values;
        out["vectors"] = vectors;
        out["dominant_index"] = d.dominant_index;
        out["rate"] = d.rate;
        return out;
      },
      py::arg("n"), py::arg("k"));
  m.def(
      "convergence_rate",
      [](unsigned n, const py::int_& k) {
        const auto r = spectral::convergence_rate(params(n, k));
        return py::make_tuple(r.rho, r.digits_per_step);
      },
      py::arg("n"), py::arg("k"));
  m.def(
      "decompose",
      [](unsigned n, const py::int_& k, const std::vector<spectral::Complex>& v) {
        return spectral::decompose(params(n, k), v).coefficients;
      },
      py::arg("n"), py::arg("k"), py::arg("vector"));

  m.def(
      "integer_nth_root", [](const py::int_& value, unsigned n) { return to_py(oracle::integer_nth_root(to_exact(value), n)); },
      py::arg("m"), py::arg("n"));
  m.def(
      "nth_root_bracket",
      [](unsigned n, const py::int_& k, unsigned d) {
        const auto b = oracle::nth_root_bracket(params(n, k), d);
        return py::make_tuple(to_py(b.lo), to_py(b.scale));
      },
      py::arg("n"), py::arg("k"), py::arg("d"));
  m.def(
      "digits_of_accuracy",
      [](const py::object& candidate, unsigned n, const py::int_& k, unsigned cap) {
        return oracle::digits_of_accuracy(from_fraction(candidate), params(n, k), cap);
      },
      py::arg("candidate"), py::arg("n"), py::arg("k"), py::arg("cap") = 40);

  m.def(
      "approx",
      [](unsigned n, const py::int_& k, unsigned digits, const std::string& format) {
        commands::ApproxOptions opts;
        opts.target_digits = digits;
        return output::render(commands::cmd_approx(params(n, k), opts), output::parse_format(format));
      },
      py::arg("n"), py::arg("k"), py::arg("digits"), py::arg("format") = "json");
  m.def(
      "table",
      [](unsigned n, const py::int_& k, std::uint64_t t0, std::uint64_t t1, std::size_t index, const std::string& format) {
        commands::TableOptions opts;
        opts.t0 = t0;
        opts.t1 = t1;
        opts.index = index;
        return output::render(commands::cmd_table(params(n, k), opts), output::parse_format(format));
      },
      py::arg("n"), py::arg("k"), py::arg("t0") = 0, py::arg("t1") = 5, py::arg("index") = 1,
      py::arg("format") = "json");
  m.def(
      "selftest",
      [] {
        py::list out;
        for (const auto& g : selftest::run()) out.append(py::make_tuple(g.name, g.passed, g.detail));
        return out;
      });
}
