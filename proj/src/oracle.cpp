#include "nroot/oracle.hpp"

#include <cmath>
#include <limits>

namespace nroot::oracle {

namespace {

ExactInt ipow(const ExactInt& base, unsigned e) {
  ExactInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

ExactInt pow10(unsigned e) {
  ExactInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

double log10_abs(const ExactInt& v) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

constexpr unsigned kGuardDigits = 5;

}  // namespace

ExactInt integer_nth_root(const ExactInt& m, unsigned n) {
  if (m < 0) throw InvalidArgument("integer_nth_root: negative radicand " + to_string(m));
  if (n < 1) throw InvalidArgument("integer_nth_root: order must be >= 1");
  if (n == 1 || m < 2) return m;

  // Invariant: lo^n <= m < hi^n.
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  ExactInt lo = 0;
  ExactInt hi = 1;
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), bits / n + 1);
  while (hi - lo > 1) {
    ExactInt mid = (lo + hi) / 2;
    if (ipow(mid, n) <= m)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return lo;
}

bool RootBracket::exact() const { return ipow(lo, params.n()) == params.k() * ipow(scale, params.n()); }

RootBracket nth_root_bracket(const Params& params, unsigned d) {
  ExactInt scale = pow10(d);
  ExactInt lo = integer_nth_root(params.k() * ipow(scale, params.n()), params.n());
  return RootBracket{params, d, std::move(scale), std::move(lo)};
}

std::optional<ExactInt> exact_root(const Params& params) {
  ExactInt r = integer_nth_root(params.k(), params.n());
  if (ipow(r, params.n()) == params.k()) return r;
  return std::nullopt;
}

unsigned digits_of_accuracy(const ExactRat& candidate, const RootBracket& bracket, unsigned cap) {
  if (cap < 1) throw InvalidArgument("digits_of_accuracy: cap must be >= 1");
  if (bracket.digits < cap + kGuardDigits)
    throw InvalidArgument("digits_of_accuracy: bracket too coarse for cap " + std::to_string(cap));

  // Upper bound on |candidate - root|: farthest bracket endpoint, or the exact root itself.
  ExactRat bound = (candidate - bracket.lower()).abs();
  if (!bracket.exact()) bound = std::max(bound, (candidate - bracket.upper()).abs());

  // bound < 10^-d  <=>  num * 10^d < den
  ExactInt lhs = bound.num();
  const ExactInt den = bound.den();
  unsigned d = 0;
  while (d < cap) {
    lhs *= 10;
    if (!(lhs < den)) break;
    ++d;
  }
  return d;
}

unsigned digits_of_accuracy(const ExactRat& candidate, const Params& params, unsigned cap) {
  return digits_of_accuracy(candidate, nth_root_bracket(params, cap + kGuardDigits), cap);
}

double log10_error(const ExactRat& candidate, const RootBracket& bracket) {
  const ExactRat diff = (candidate - (bracket.exact() ? bracket.lower() : bracket.midpoint())).abs();
  if (diff.is_zero()) return -std::numeric_limits<double>::infinity();
  return log10_abs(diff.num()) - log10_abs(diff.den());
}

}  // namespace nroot::oracle
