#pragma once

// Exact domain types shared by every nroot module.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nroot/errors.hpp"

namespace nroot {

using ExactInt = mpz_class;

ExactInt parse_int(std::string_view text);
std::string to_string(const ExactInt& value);

/// Problem instance: approximate the n-th root of k.
class Params {
 public:
  Params(unsigned n, ExactInt k);
  Params(unsigned n, long k) : Params(n, ExactInt(k)) {}

  unsigned n() const noexcept { return n_; }
  const ExactInt& k() const noexcept { return k_; }

  friend bool operator==(const Params& a, const Params& b) { return a.n_ == b.n_ && a.k_ == b.k_; }

 private:
  unsigned n_;
  ExactInt k_;
};

/// Rational number kept in lowest terms with a positive denominator.
class ExactRat {
 public:
  ExactRat() = default;
  ExactRat(ExactInt num, ExactInt den = 1);
  ExactRat(long num, long den = 1) : ExactRat(ExactInt(num), ExactInt(den)) {}
  explicit ExactRat(mpq_class value);

  /// Accepts "p/q" or "p".
  static ExactRat parse(std::string_view text);

  ExactInt num() const { return value_.get_num(); }
  ExactInt den() const { return value_.get_den(); }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  ExactRat operator-() const { return ExactRat(mpq_class(-value_)); }
  friend ExactRat operator+(const ExactRat& a, const ExactRat& b) { return ExactRat(mpq_class(a.value_ + b.value_)); }
  friend ExactRat operator-(const ExactRat& a, const ExactRat& b) { return ExactRat(mpq_class(a.value_ - b.value_)); }
  friend ExactRat operator*(const ExactRat& a, const ExactRat& b) { return ExactRat(mpq_class(a.value_ * b.value_)); }
  friend ExactRat operator/(const ExactRat& a, const ExactRat& b);

  friend bool operator==(const ExactRat& a, const ExactRat& b) { return a.value_ == b.value_; }
  friend bool operator<(const ExactRat& a, const ExactRat& b) { return a.value_ < b.value_; }
  friend bool operator<=(const ExactRat& a, const ExactRat& b) { return a.value_ <= b.value_; }
  friend bool operator>(const ExactRat& a, const ExactRat& b) { return a.value_ > b.value_; }
  friend bool operator>=(const ExactRat& a, const ExactRat& b) { return a.value_ >= b.value_; }

  ExactRat abs() const { return ExactRat(mpq_class(::abs(value_))); }
  ExactRat pow(unsigned e) const;

  /// Always "p/q", including q = 1.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRat& r);

/// Decimal expansion truncated toward zero with exactly `places` digits after the point.
std::string to_decimal(const ExactRat& value, unsigned places);

/// Exact integer state R_t with its time index.
class StateVector {
 public:
  /// Throws ZeroVector when every entry is zero.
  StateVector(std::vector<ExactInt> entries, std::uint64_t t = 0);
  StateVector(std::initializer_list<long> entries, std::uint64_t t = 0);

  std::size_t size() const noexcept { return entries_.size(); }
  std::uint64_t t() const noexcept { return t_; }
  const std::vector<ExactInt>& entries() const noexcept { return entries_; }
  /// 1-based, matching R_{t,i}.
  const ExactInt& at1(std::size_t i) const;
  const ExactInt& operator[](std::size_t i) const { return entries_[i]; }

  std::string str() const;

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.t_ == b.t_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<ExactInt> entries_;
  std::uint64_t t_;
};

StateVector ones_vector(unsigned n);

/// Square integer matrix, row-major.
class MatrixN {
 public:
  explicit MatrixN(std::size_t n);
  MatrixN(std::initializer_list<std::initializer_list<long>> rows);

  static MatrixN identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  ExactInt& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const ExactInt& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend MatrixN operator*(const MatrixN& a, const MatrixN& b);
  friend MatrixN operator+(const MatrixN& a, const MatrixN& b);
  friend MatrixN operator-(const MatrixN& a, const MatrixN& b);
  friend MatrixN operator*(const ExactInt& s, const MatrixN& a);
  std::vector<ExactInt> apply(std::span<const ExactInt> v) const;

  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const MatrixN& a, const MatrixN& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t n_;
  std::vector<ExactInt> data_;
};

std::ostream& operator<<(std::ostream& os, const MatrixN& m);

/// Element of Z[x]/(x^n - k); coeffs[i] multiplies x^i.
class RingPoly {
 public:
  explicit RingPoly(Params params);
  RingPoly(Params params, std::vector<ExactInt> coeffs);

  static RingPoly one(const Params& params);

  const Params& params() const noexcept { return params_; }
  const std::vector<ExactInt>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const RingPoly& a, const RingPoly& b) {
    return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Params params_;
  std::vector<ExactInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RingPoly& p);

}  // namespace nroot
