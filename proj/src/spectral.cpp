#include "nroot/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nroot/engine.hpp"

namespace nroot::spectral {

namespace {

// e^(2 pi i j / n), exact at the quarter turns.
Complex unit_root(std::size_t j, std::size_t n) {
  j %= n;
  if (j == 0) return {1.0, 0.0};
  if (2 * j == n) return {-1.0, 0.0};
  if (4 * j == n) return {0.0, 1.0};
  if (4 * j == 3 * n) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
}

double real_root(const Params& params) {
  return std::pow(params.k().get_d(), 1.0 / static_cast<double>(params.n()));
}

constexpr double kResidualBound = 1e-9;

Complex ipow(Complex base, std::uint64_t e) {
  Complex acc{1.0, 0.0};
  while (e != 0) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return acc;
}

}  // namespace

SpectralData eigenvalues(const Params& params) {
  const std::size_t n = params.n();
  const double c = real_root(params);
  SpectralData data{params, {}, 0, 0.0};
  data.pairs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    EigenPair pair;
    pair.value = 1.0 + c * unit_root(j, n);
    pair.vector.resize(n);
    for (std::size_t m = 0; m < n; ++m) pair.vector[n - 1 - m] = std::pow(c, static_cast<double>(m)) * unit_root(j * m, n);
    data.pairs.push_back(std::move(pair));
  }
  double sub = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    // |1 + c u|^2 = 1 + 2c Re(u) + c^2, which is exactly 0 for n = 2, k = 1.
    const double mod2 = 1.0 + 2.0 * c * unit_root(j, n).real() + c * c;
    sub = std::max(sub, std::sqrt(std::max(mod2, 0.0)));
  }
  data.rate = sub / (1.0 + c);
  return data;
}

ConvergenceRate convergence_rate(const Params& params) {
  const double rho = eigenvalues(params).rate;
  if (rho == 0.0)
    throw DegenerateRate("all subdominant eigenvalues vanish for n=" + std::to_string(params.n()) +
                         ", k=" + to_string(params.k()) + "; the ratio is exact after one step");
  return {rho, -std::log10(rho)};
}

Decomposition decompose(const Params& params, std::span<const Complex> r0) {
  const std::size_t n = params.n();
  if (r0.size() != n) throw InvalidArgument("decompose: vector length does not match n");
  SpectralData basis = eigenvalues(params);

  Eigen::MatrixXcd v(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = basis.pairs[j].vector[r];
  Eigen::VectorXcd rhs(n);
  for (std::size_t r = 0; r < n; ++r) rhs(static_cast<Eigen::Index>(r)) = r0[r];

  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(v);
  const Eigen::VectorXcd c = lu.solve(rhs);
  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  const double residual = (v * c - rhs).cwiseAbs().maxCoeff() / scale;
  const double rcond = lu.rcond();
  const double condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(residual < kResidualBound)) throw IllConditioned(condition, residual);

  Decomposition d{{}, std::move(basis), residual, condition};
  d.coefficients.assign(c.data(), c.data() + n);
  return d;
}

Decomposition decompose(const Params& params, const StateVector& r0) {
  std::vector<Complex> v;
  v.reserve(r0.size());
  for (const auto& e : r0.entries()) v.emplace_back(e.get_d(), 0.0);
  return decompose(params, v);
}

std::vector<Complex> predict(const Decomposition& d, std::uint64_t t) {
  const std::size_t n = d.coefficients.size();
  std::vector<Complex> out(n, Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pair = d.basis.pairs[i];
    const Complex weight = d.coefficients[i] * ipow(pair.value, t);
    for (std::size_t r = 0; r < n; ++r) out[r] += weight * pair.vector[r];
  }
  return out;
}

Complex characteristic_value(const Params& params, Complex lambda) {
  const double sign = (params.n() % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n+1)
  return ipow(1.0 - lambda, params.n()) + sign * params.k().get_d();
}

double eigen_residual(const Params& params, const EigenPair& pair) {
  const MatrixN pi = engine::build_companion(params);
  const std::size_t n = params.n();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < n; ++c) acc += pi(r, c).get_d() * pair.vector[c];
    worst = std::max(worst, std::abs(acc - pair.value * pair.vector[r]));
  }
  return worst;
}

}  // namespace nroot::spectral
