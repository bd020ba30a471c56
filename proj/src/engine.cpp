#include "nroot/engine.hpp"

namespace nroot::engine {

namespace {

// Reduce p modulo a monic polynomial of degree n (both low degree first).
std::vector<ExactInt> reduce_monic(std::vector<ExactInt> p, const std::vector<ExactInt>& monic) {
  const std::size_t n = monic.size() - 1;
  for (std::size_t i = p.size(); i-- > n;) {
    if (p[i] == 0) continue;
    const ExactInt lead = p[i];
    for (std::size_t j = 0; j <= n; ++j) p[i - n + j] -= lead * monic[j];
  }
  p.resize(n, ExactInt(0));
  return p;
}

std::vector<ExactInt> mul_mod(const std::vector<ExactInt>& a, const std::vector<ExactInt>& b,
                              const std::vector<ExactInt>& monic) {
  std::vector<ExactInt> prod(a.size() + b.size() - 1, ExactInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  return reduce_monic(std::move(prod), monic);
}

void check_length(const Params& params, const StateVector& r0) {
  if (r0.size() != params.n())
    throw InvalidArgument("initial vector has " + std::to_string(r0.size()) + " entries, expected " +
                          std::to_string(params.n()));
}

}  // namespace

MatrixN build_companion(const Params& params) { return MatrixN::identity(params.n()) + build_cyclic(params); }

MatrixN build_cyclic(const Params& params) {
  const std::size_t n = params.n();
  MatrixN m(n);
  m(0, n - 1) = params.k();
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  return m;
}

MatrixN mat_pow(const MatrixN& a, std::uint64_t t, PowerMethod method) {
  if (t == 0) return MatrixN::identity(a.size());
  if (method == PowerMethod::naive) {
    MatrixN acc = a;
    for (std::uint64_t i = 1; i < t; ++i) acc = acc * a;
    return acc;
  }
  MatrixN result = MatrixN::identity(a.size());
  MatrixN base = a;
  while (true) {
    if (t & 1U) result = result * base;
    t >>= 1U;
    if (t == 0) break;
    base = base * base;
  }
  return result;
}

RingPoly ring_mul(const RingPoly& a, const RingPoly& b) {
  if (!(a.params() == b.params()))
    throw ParamsMismatch("ring_mul operands belong to different rings (n=" + std::to_string(a.params().n()) +
                         ", k=" + to_string(a.params().k()) + " vs n=" + std::to_string(b.params().n()) +
                         ", k=" + to_string(b.params().k()) + ")");
  const std::size_t n = a.params().n();
  const ExactInt& k = a.params().k();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();

  std::vector<ExactInt> low(n, ExactInt(0));
  std::vector<ExactInt> high(n, ExactInt(0));  // coefficient of x^(n+i)
  for (std::size_t i = 0; i < n; ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j < n)
        low[i + j] += ac[i] * bc[j];
      else
        high[i + j - n] += ac[i] * bc[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) low[i] += k * high[i];
  return RingPoly(a.params(), std::move(low));
}

RingPoly ring_pow(const RingPoly& base_in, std::uint64_t t) {
  RingPoly result = RingPoly::one(base_in.params());
  RingPoly base = base_in;
  while (t != 0) {
    if (t & 1U) result = ring_mul(result, base);
    t >>= 1U;
    if (t != 0) base = ring_mul(base, base);
  }
  return result;
}

RingPoly ring_pow_one_plus_x(const Params& params, std::uint64_t t) {
  std::vector<ExactInt> one_plus_x(params.n(), ExactInt(0));
  one_plus_x[0] = 1;
  one_plus_x[1] = 1;
  return ring_pow(RingPoly(params, std::move(one_plus_x)), t);
}

StateVector apply_power(const Params& params, std::uint64_t t, const StateVector& r0) {
  check_length(params, r0);
  const RingPoly start(params, r0.entries());
  const RingPoly out = ring_mul(ring_pow_one_plus_x(params, t), start);
  return StateVector(out.coeffs(), t);
}

StateVector apply_power_matrix(const Params& params, std::uint64_t t, const StateVector& r0,
                               PowerMethod method) {
  check_length(params, r0);
  const MatrixN p = mat_pow(build_companion(params), t, method);
  return StateVector(p.apply(r0.entries()), t);
}

std::vector<ExactInt> characteristic_polynomial(const Params& params) {
  // (y - 1)^n - k
  const unsigned n = params.n();
  std::vector<ExactInt> c(n + 1, ExactInt(0));
  ExactInt binom = 1;
  for (unsigned i = 0; i <= n; ++i) {
    c[i] = ((n - i) % 2 == 0) ? binom : ExactInt(-binom);
    binom = binom * (n - i) / (i + 1);
  }
  c[0] -= params.k();
  return c;
}

PiBasisCoeffs pi_basis_coeffs(const Params& params, std::uint64_t t) {
  const auto monic = characteristic_polynomial(params);
  const std::size_t n = params.n();
  std::vector<ExactInt> result(n, ExactInt(0));
  result[0] = 1;
  std::vector<ExactInt> base(n, ExactInt(0));
  base[1] = 1;
  for (std::uint64_t e = t; e != 0;) {
    if (e & 1U) result = mul_mod(result, base, monic);
    e >>= 1U;
    if (e != 0) base = mul_mod(base, base, monic);
  }
  return PiBasisCoeffs{params, t, std::move(result)};
}

PiBasisCoeffs pi_basis_mul(const PiBasisCoeffs& a, const PiBasisCoeffs& b) {
  if (!(a.params == b.params)) throw ParamsMismatch("pi_basis_mul operands use different params");
  return PiBasisCoeffs{a.params, a.t + b.t, mul_mod(a.coeffs, b.coeffs, characteristic_polynomial(a.params))};
}

MatrixN reconstruct(const PiBasisCoeffs& c) {
  const MatrixN pi = build_companion(c.params);
  MatrixN power = MatrixN::identity(c.params.n());
  MatrixN sum(c.params.n());
  for (const ExactInt& a : c.coeffs) {
    sum = sum + a * power;
    power = power * pi;
  }
  return sum;
}

std::vector<std::pair<std::uint64_t, PiBasisCoeffs>> fib_power_chain(const Params& params,
                                                                     std::size_t chain_length) {
  if (chain_length == 0) throw InvalidArgument("chain_length must be >= 1");
  std::vector<ExactInt> first(params.n(), ExactInt(0));
  first[1] = 1;
  PiBasisCoeffs older{params, 1, std::move(first)};
  PiBasisCoeffs newer = pi_basis_mul(older, older);

  std::vector<std::pair<std::uint64_t, PiBasisCoeffs>> chain;
  chain.reserve(chain_length);
  chain.emplace_back(newer.t, newer);
  while (chain.size() < chain_length) {
    PiBasisCoeffs next = pi_basis_mul(newer, older);
    older = std::move(newer);
    newer = std::move(next);
    chain.emplace_back(newer.t, newer);
  }
  return chain;
}

}  // namespace nroot::engine
