#pragma once

// Pi_n = I + pi_n and three independent ways of raising it to a power:
// repeated multiplication, binary exponentiation, and (1+x)^t in Z[x]/(x^n - k).
// Also the Cayley-Hamilton reduction of Pi_n^t onto {I, Pi_n, ..., Pi_n^(n-1)}.

#include <cstdint>
#include <utility>
#include <vector>

#include "nroot/core.hpp"

namespace nroot::engine {

enum class PowerMethod { naive, binary };

/// Pi_n: ones on the diagonal and first subdiagonal, k in the top-right corner.
MatrixN build_companion(const Params& params);

/// pi_n: the k-weighted cyclic shift; pi_n^n = k I.
MatrixN build_cyclic(const Params& params);

MatrixN mat_pow(const MatrixN& a, std::uint64_t t, PowerMethod method);

/// Product in Z[x]/(x^n - k). Throws ParamsMismatch.
RingPoly ring_mul(const RingPoly& a, const RingPoly& b);

RingPoly ring_pow(const RingPoly& base, std::uint64_t t);

/// (1+x)^t reduced; coefficient i is entry i+1 of Pi_n^t e_1.
RingPoly ring_pow_one_plus_x(const Params& params, std::uint64_t t);

/// R_t = Pi_n^t R_0 via the quotient ring.
StateVector apply_power(const Params& params, std::uint64_t t, const StateVector& r0);

/// R_t = Pi_n^t R_0 via an explicit matrix power.
StateVector apply_power_matrix(const Params& params, std::uint64_t t, const StateVector& r0,
                               PowerMethod method);

struct PiBasisCoeffs {
  Params params;
  std::uint64_t t = 0;
  /// coeffs[i] multiplies Pi_n^i.
  std::vector<ExactInt> coeffs;

  friend bool operator==(const PiBasisCoeffs&, const PiBasisCoeffs&) = default;
};

/// Monic characteristic polynomial (y-1)^n - k of Pi_n, low degree first, n+1 entries.
std::vector<ExactInt> characteristic_polynomial(const Params& params);

/// Pi_n^t written as sum a_i Pi_n^i, i < n, via y^t mod the characteristic polynomial.
PiBasisCoeffs pi_basis_coeffs(const Params& params, std::uint64_t t);

/// Product of two Pi-basis expansions, reduced back into the basis.
PiBasisCoeffs pi_basis_mul(const PiBasisCoeffs& a, const PiBasisCoeffs& b);

/// Sum a_i Pi_n^i as an explicit matrix.
MatrixN reconstruct(const PiBasisCoeffs& c);

/// Exponents 2, 3, 5, 8, ... each built from its two predecessors.
std::vector<std::pair<std::uint64_t, PiBasisCoeffs>> fib_power_chain(const Params& params,
                                                                     std::size_t chain_length);

}  // namespace nroot::engine
