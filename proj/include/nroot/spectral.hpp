#pragma once

// Double-precision eigen-analysis of Pi_n. The roots of (lambda - 1)^n = k are
// taken in closed form; nothing here is exact.

#include <complex>
#include <cstdint>
#include <vector>

#include "nroot/core.hpp"

namespace nroot::spectral {

using Complex = std::complex<double>;

struct EigenPair {
  Complex value;
  /// Entry m counted from the bottom is (value - 1)^m; last entry is 1.
  std::vector<Complex> vector;
};

struct SpectralData {
  Params params;
  /// pairs[j].value = 1 + k^(1/n) e^(2 pi i j / n).
  std::vector<EigenPair> pairs;
  std::size_t dominant_index = 0;
  /// Second-largest |lambda| over lambda_d.
  double rate = 0.0;

  const EigenPair& dominant() const { return pairs[dominant_index]; }
};

struct Decomposition {
  std::vector<Complex> coefficients;
  SpectralData basis;
  double residual = 0.0;
  double condition = 0.0;
};

struct ConvergenceRate {
  double rho;
  double digits_per_step;
};

SpectralData eigenvalues(const Params& params);

/// Throws DegenerateRate when rho = 0 (only n = 2, k = 1).
ConvergenceRate convergence_rate(const Params& params);

/// Coefficients c with sum c_i v_i = r0. Throws IllConditioned.
Decomposition decompose(const Params& params, std::span<const Complex> r0);
Decomposition decompose(const Params& params, const StateVector& r0);

/// sum c_i lambda_i^t v_i
std::vector<Complex> predict(const Decomposition& d, std::uint64_t t);

/// (1 - lambda)^n + (-1)^(n+1) k
Complex characteristic_value(const Params& params, Complex lambda);

/// || Pi_n v - lambda v ||_inf
double eigen_residual(const Params& params, const EigenPair& pair);

}  // namespace nroot::spectral
