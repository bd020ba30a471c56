#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nroot {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad Params, wrong vector length, unparsable numbers.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParamsMismatch : public Error {
 public:
  using Error::Error;
};

/// A trajectory state collapsed to the zero vector (singular Pi_n).
class ZeroVector : public Error {
 public:
  explicit ZeroVector(std::uint64_t t)
      : Error("state vector is entirely zero at t=" + std::to_string(t)), t_(t) {}
  std::uint64_t t() const noexcept { return t_; }

 private:
  std::uint64_t t_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// r^(n-1) + 1 vanished in the scalar ratio map.
class PoleEncountered : public Error {
 public:
  PoleEncountered(std::uint64_t t, const std::string& ratio)
      : Error("scalar map pole at t=" + std::to_string(t) + " (r=" + ratio + ")"), t_(t) {}
  std::uint64_t t() const noexcept { return t_; }

 private:
  std::uint64_t t_;
};

/// All subdominant eigenvalues vanish; the rate is undefined.
class DegenerateRate : public Error {
 public:
  using Error::Error;
};

class IllConditioned : public Error {
 public:
  IllConditioned(double condition, double residual)
      : Error("eigenvector system is ill-conditioned (cond ~ " + std::to_string(condition) +
              ", residual " + std::to_string(residual) + ")"),
        condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace nroot
