#include "doctest.h"

#include <random>

#include "nroot/engine.hpp"

using namespace nroot;
using namespace nroot::engine;

namespace {

ExactInt binom(unsigned n, unsigned k) {
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Fraction-free Gaussian elimination; returns det exactly.
ExactInt bareiss_det(MatrixN m) {
  const std::size_t n = m.size();
  ExactInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Binomial transform of (1+x)^t coefficients: pi = Pi - I.
std::vector<ExactInt> basis_from_ring(const Params& p, std::uint64_t t) {
  const auto b = ring_pow_one_plus_x(p, t).coeffs();
  std::vector<ExactInt> a(p.n(), ExactInt(0));
  for (unsigned i = 0; i < p.n(); ++i)
    for (unsigned j = 0; j <= i; ++j) a[j] += b[i] * binom(i, j) * (((i - j) % 2) ? -1 : 1);
  return a;
}

std::vector<ExactInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("build_companion") {
  CHECK(build_companion(Params(2, 2)) == MatrixN{{1, 2}, {1, 1}});
  CHECK(build_companion(Params(3, 5)) == MatrixN{{1, 0, 5}, {1, 1, 0}, {0, 1, 1}});
  CHECK(build_companion(Params(2, 1)) == MatrixN{{1, 1}, {1, 1}});
}

TEST_CASE("build_cyclic") {
  CHECK(build_cyclic(Params(2, 2)) == MatrixN{{0, 2}, {1, 0}});
  CHECK(build_cyclic(Params(2, 1)) == MatrixN{{0, 1}, {1, 0}});
  const MatrixN pi3 = build_cyclic(Params(3, 2));
  CHECK(pi3 * pi3 * pi3 == MatrixN{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  for (unsigned n = 2; n <= 8; ++n)
    for (long k : {1, 4, 13}) CHECK(mat_pow(build_cyclic(Params(n, k)), n, PowerMethod::naive) == ExactInt(k) * MatrixN::identity(n));
}

TEST_CASE("mat_pow") {
  const MatrixN pi = build_companion(Params(2, 2));
  for (auto m : {PowerMethod::naive, PowerMethod::binary}) {
    CHECK(mat_pow(pi, 0, m) == MatrixN::identity(2));
    CHECK(mat_pow(pi, 1, m) == pi);
    CHECK(mat_pow(pi, 2, m) == MatrixN{{3, 4}, {2, 3}});
    CHECK(mat_pow(pi, 5, m) == MatrixN{{41, 58}, {29, 41}});
  }
  // column sums under (1,1): 99/70
  CHECK(mat_pow(pi, 5, PowerMethod::binary).apply(ints({1, 1})) == ints({99, 70}));
}

TEST_CASE("ring_mul") {
  const Params p3(3, 2);
  const RingPoly x2(p3, ints({0, 0, 1}));
  CHECK(ring_mul(x2, x2).coeffs() == ints({0, 2, 0}));

  const Params p2(2, 2);
  const RingPoly one_plus_x(p2, ints({1, 1}));
  CHECK(ring_mul(one_plus_x, one_plus_x).coeffs() == ints({3, 2}));

  const RingPoly q(p3, ints({4, -7, 11}));
  CHECK(ring_mul(RingPoly::one(p3), q) == q);
  CHECK(ring_mul(q, RingPoly::one(p3)) == q);

  CHECK_THROWS_AS(ring_mul(RingPoly::one(Params(3, 2)), RingPoly::one(Params(3, 3))), ParamsMismatch);
  CHECK_THROWS_AS(ring_mul(RingPoly::one(Params(3, 2)), RingPoly::one(Params(4, 2))), ParamsMismatch);
}

TEST_CASE("ring_pow_one_plus_x") {
  // (1+x)^5 = 41 + 29x with x^2 = 2, i.e. Pi_2^5 e_1; Pi_2^5 (1,1) = (99,70) is checked under apply_power
  CHECK(ring_pow_one_plus_x(Params(2, 2), 5).coeffs() == ints({41, 29}));
  CHECK(mat_pow(build_companion(Params(2, 2)), 5, PowerMethod::naive).apply(ints({1, 0})) == ints({41, 29}));
  CHECK(ring_pow_one_plus_x(Params(5, 9), 0) == RingPoly::one(Params(5, 9)));
  // (1+x)^2 = 1 + 2x + x^2, degree < 3 so no folding; equals Pi_3^2 e_1.
  CHECK(ring_pow_one_plus_x(Params(3, 2), 2).coeffs() == ints({1, 2, 1}));
  CHECK(mat_pow(build_companion(Params(3, 2)), 2, PowerMethod::naive).apply(ints({1, 0, 0})) == ints({1, 2, 1}));
}

TEST_CASE("ring power is a homomorphism in the exponent") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (long k : {1, 2, 7, 20}) {
      const Params p(n, k);
      for (std::uint64_t s : {0, 1, 3, 10})
        for (std::uint64_t t : {0, 2, 9, 31})
          CHECK(ring_pow_one_plus_x(p, s + t) == ring_mul(ring_pow_one_plus_x(p, s), ring_pow_one_plus_x(p, t)));
    }
  }
}

TEST_CASE("apply_power") {
  CHECK(apply_power(Params(2, 2), 5, StateVector{1, 1}).entries() == ints({99, 70}));
  CHECK(apply_power(Params(2, 2), 5, StateVector{1, 1}).t() == 5);
  const StateVector r0{4, -1, 0, 2};
  CHECK(apply_power(Params(4, 3), 0, r0).entries() == r0.entries());
  CHECK(apply_power(Params(3, 2), 2, StateVector{1, 1, 1}).entries() == ints({7, 5, 4}));
  CHECK_THROWS_AS(apply_power(Params(3, 2), 2, StateVector{1, 1}), InvalidArgument);
  // singular Pi_2 at k = 1
  CHECK_THROWS_AS(apply_power(Params(2, 1), 1, StateVector{-1, 1}), ZeroVector);
}

TEST_CASE("three power engines agree on a grid") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (unsigned n = 2; n <= 6; ++n) {
    for (long k : {1, 2, 3, 7, 20}) {
      const Params p(n, k);
      for (std::uint64_t t = 0; t <= 50; t += 7) {
        std::vector<ExactInt> e(n);
        for (auto& x : e) x = entry(rng);
        e[0] = (e[0] == 0) ? 1 : e[0];
        const StateVector r0(e);
        try {
          const auto naive = apply_power_matrix(p, t, r0, PowerMethod::naive);
          CHECK(naive == apply_power_matrix(p, t, r0, PowerMethod::binary));
          CHECK(naive == apply_power(p, t, r0));
        } catch (const ZeroVector&) {
          CHECK_THROWS_AS(apply_power(p, t, r0), ZeroVector);
        }
      }
    }
  }
}

TEST_CASE("Cayley-Hamilton and the solved form for Pi^n") {
  for (unsigned n = 2; n <= 8; ++n) {
    for (long k : {1, 2, 3, 5, 10, 16}) {
      const Params p(n, k);
      const MatrixN pi = build_companion(p);
      const MatrixN id = MatrixN::identity(n);
      CHECK(mat_pow(pi - id, n, PowerMethod::binary) == ExactInt(k) * id);

      // Pi^n - sum_{i=1}^{n-1} C(n,i)(-1)^(n-1-i) Pi^i - ((-1)^(n-1) + k) I = 0
      MatrixN rhs = ExactInt(((n - 1) % 2 ? -1 : 1) + k) * id;
      for (unsigned i = 1; i < n; ++i)
        rhs = rhs + ExactInt(binom(n, i) * (((n - 1 - i) % 2) ? -1 : 1)) * mat_pow(pi, i, PowerMethod::naive);
      CHECK(mat_pow(pi, n, PowerMethod::naive) == rhs);
    }
  }
}

TEST_CASE("determinant of Pi_n") {
  for (unsigned n = 2; n <= 7; ++n)
    for (long k : {1, 2, 3, 9}) CHECK(bareiss_det(build_companion(Params(n, k))) == 1 + ((n % 2) ? k : -k));
  CHECK(bareiss_det(build_companion(Params(2, 1))) == 0);
  CHECK(bareiss_det(build_companion(Params(2, 2))) != 0);
}

TEST_CASE("positive starts stay positive") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(1, 30);
  for (unsigned n = 2; n <= 5; ++n) {
    const Params p(n, 6);
    std::vector<ExactInt> e(n);
    for (auto& x : e) x = entry(rng);
    for (std::uint64_t t = 0; t < 40; ++t)
      for (const auto& x : apply_power(p, t, StateVector(e)).entries()) CHECK(x > 0);
  }
}

TEST_CASE("pi_basis_coeffs") {
  const Params p(2, 2);
  CHECK(pi_basis_coeffs(p, 2).coeffs == ints({1, 2}));
  // (k+3) Pi + 2(k-1) I at k = 2
  CHECK(pi_basis_coeffs(p, 3).coeffs == ints({2, 5}));
  CHECK(pi_basis_coeffs(p, 5).coeffs == ints({12, 29}));
  CHECK(pi_basis_coeffs(Params(3, 2), 0).coeffs == ints({1, 0, 0}));
  CHECK(pi_basis_coeffs(Params(3, 2), 1).coeffs == ints({0, 1, 0}));

  for (unsigned n = 2; n <= 6; ++n) {
    for (long k : {1, 2, 3, 7, 20}) {
      const Params q(n, k);
      for (std::uint64_t t : {0, 1, 2, 5, 11, 24}) {
        const auto c = pi_basis_coeffs(q, t);
        CHECK(c.t == t);
        CHECK(c.coeffs.size() == n);
        CHECK(reconstruct(c) == mat_pow(build_companion(q), t, PowerMethod::naive));
        CHECK(c.coeffs == basis_from_ring(q, t));
      }
    }
  }
}

TEST_CASE("characteristic polynomial is (y-1)^n - k") {
  CHECK(characteristic_polynomial(Params(2, 2)) == ints({-1, -2, 1}));
  CHECK(characteristic_polynomial(Params(3, 5)) == ints({-6, 3, -3, 1}));
}

TEST_CASE("fib_power_chain") {
  const auto chain = fib_power_chain(Params(2, 2), 3);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0].first == 2);
  CHECK(chain[1].first == 3);
  CHECK(chain[2].first == 5);
  CHECK(chain[0].second.coeffs == ints({1, 2}));
  CHECK(chain[1].second.coeffs == ints({2, 5}));
  CHECK(chain[2].second.coeffs == ints({12, 29}));

  const Params p(5, 3);
  const auto one = fib_power_chain(p, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].second == pi_basis_coeffs(p, 2));

  const Params p3(3, 2);
  const auto four = fib_power_chain(p3, 4);
  const std::uint64_t expected[] = {2, 3, 5, 8};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(four[i].first == expected[i]);
    CHECK(four[i].second == pi_basis_coeffs(p3, expected[i]));
    CHECK(reconstruct(four[i].second) == mat_pow(build_companion(p3), expected[i], PowerMethod::naive));
  }
  CHECK_THROWS_AS(fib_power_chain(p3, 0), InvalidArgument);
}
