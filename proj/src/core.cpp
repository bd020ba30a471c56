#include "nroot/core.hpp"

#include <algorithm>
#include <sstream>

namespace nroot {

ExactInt parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || !std::all_of(s.begin() + (s.front() == '-' ? 1 : 0), s.end(),
                                [](char c) { return c >= '0' && c <= '9'; }) ||
      s == "-") {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  return ExactInt(s, 10);
}

std::string to_string(const ExactInt& value) { return value.get_str(10); }

Params::Params(unsigned n, ExactInt k) : n_(n), k_(std::move(k)) {
  if (n_ < 2) throw InvalidArgument("root order n must be >= 2, got " + std::to_string(n_));
  if (k_ < 1) throw InvalidArgument("radicand k must be >= 1, got " + to_string(k_));
}

// ---------------------------------------------------------------------------

ExactRat::ExactRat(ExactInt num, ExactInt den) {
  if (den == 0) throw DivisionByZero("zero denominator in " + to_string(num) + "/0");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRat::ExactRat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRat ExactRat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRat(parse_int(text));
  return ExactRat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

ExactRat operator/(const ExactRat& a, const ExactRat& b) {
  if (b.is_zero()) throw DivisionByZero("division of " + a.str() + " by zero");
  return ExactRat(mpq_class(a.value_ / b.value_));
}

ExactRat ExactRat::pow(unsigned e) const {
  ExactInt num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  return ExactRat(num, den);
}

std::string ExactRat::str() const { return to_string(num()) + "/" + to_string(den()); }

std::ostream& operator<<(std::ostream& os, const ExactRat& r) { return os << r.str(); }

std::string to_decimal(const ExactRat& value, unsigned places) {
  ExactInt num = value.num();
  const ExactInt den = value.den();
  const bool negative = num < 0;
  if (negative) num = -num;

  ExactInt whole = num / den;
  ExactInt rem = num % den;
  std::string out = negative ? "-" : "";
  out += to_string(whole);
  if (places == 0) return out;

  ExactInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  std::string frac = to_string(ExactInt(rem * scale / den));
  out += '.';
  out.append(places - frac.size(), '0');
  out += frac;
  return out;
}

// ---------------------------------------------------------------------------

StateVector::StateVector(std::vector<ExactInt> entries, std::uint64_t t)
    : entries_(std::move(entries)), t_(t) {
  if (entries_.empty()) throw InvalidArgument("state vector must not be empty");
  if (std::all_of(entries_.begin(), entries_.end(), [](const ExactInt& e) { return e == 0; }))
    throw ZeroVector(t_);
}

StateVector::StateVector(std::initializer_list<long> entries, std::uint64_t t)
    : StateVector(std::vector<ExactInt>(entries.begin(), entries.end()), t) {}

const ExactInt& StateVector::at1(std::size_t i) const {
  if (i < 1 || i > entries_.size())
    throw InvalidArgument("entry index " + std::to_string(i) + " outside 1.." + std::to_string(entries_.size()));
  return entries_[i - 1];
}

std::string StateVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += to_string(entries_[i]);
  }
  return out + ")";
}

StateVector ones_vector(unsigned n) { return StateVector(std::vector<ExactInt>(n, ExactInt(1))); }

// ---------------------------------------------------------------------------

MatrixN::MatrixN(std::size_t n) : n_(n), data_(n * n, ExactInt(0)) {}

MatrixN::MatrixN(std::initializer_list<std::initializer_list<long>> rows) : MatrixN(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidArgument("matrix rows must all have length " + std::to_string(n_));
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

MatrixN MatrixN::identity(std::size_t n) {
  MatrixN m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixN operator*(const MatrixN& a, const MatrixN& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix dimension mismatch");
  const std::size_t n = a.n_;
  MatrixN out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const ExactInt& ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += ail * b(l, j);
    }
  }
  return out;
}

MatrixN operator+(const MatrixN& a, const MatrixN& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix dimension mismatch");
  MatrixN out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

MatrixN operator-(const MatrixN& a, const MatrixN& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix dimension mismatch");
  MatrixN out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

MatrixN operator*(const ExactInt& s, const MatrixN& a) {
  MatrixN out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
  return out;
}

std::vector<ExactInt> MatrixN::apply(std::span<const ExactInt> v) const {
  if (v.size() != n_) throw InvalidArgument("vector length does not match matrix size");
  std::vector<ExactInt> out(n_, ExactInt(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool MatrixN::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const ExactInt& e) { return e == 0; });
}

std::string MatrixN::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MatrixN& m) {
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------------------

RingPoly::RingPoly(Params params) : params_(std::move(params)), coeffs_(params_.n(), ExactInt(0)) {}

RingPoly::RingPoly(Params params, std::vector<ExactInt> coeffs) : RingPoly(std::move(params)) {
  // Fold x^(n+j) = k * x^j until every term has degree < n.
  const std::size_t n = params_.n();
  for (std::size_t i = coeffs.size(); i-- > n;) coeffs[i - n] += params_.k() * coeffs[i];
  for (std::size_t i = 0; i < n && i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

RingPoly RingPoly::one(const Params& params) {
  RingPoly p(params);
  p.coeffs_[0] = 1;
  return p;
}

std::ostream& operator<<(std::ostream& os, const RingPoly& p) {
  os << '(';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.coeffs()[i];
  return os << ')';
}

}  // namespace nroot
