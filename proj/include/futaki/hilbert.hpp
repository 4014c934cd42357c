#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "futaki/monomial_ideal.hpp"
#include "futaki/rational.hpp"

namespace futaki {

/// Degree-m monomials outside M, grevlex-descending.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int m);

/// Number of standard monomials, by direct enumeration.
std::int64_t hilbert_function_enumerated(const MonomialIdeal& ideal, int m);

/// Numerator N(t) of the Hilbert series N(t) / (1 - t)^{num_vars}, computed
/// by pivot splitting: N(M) = N(M + (x)) + t * N(M : x).
std::vector<BigInt> hilbert_series_numerator(const MonomialIdeal& ideal);

/// Hilbert function read off the series numerator.
std::int64_t hilbert_function_from_series(std::span<const BigInt> numerator, std::size_t num_vars, int m);

enum class HilbertPath { series, enumeration };

/// Defaults to the series fast path.
std::int64_t hilbert_function(const MonomialIdeal& ideal, int m, HilbertPath path = HilbertPath::series);

struct GeometricInvariants {
  int n = 0;             // dimension
  std::int64_t d = 0;    // degree
  Rational mu;           // 2 * n! * c_{n-1} / d
};

struct HilbertProfile {
  std::map<long, std::int64_t> values;  // m -> HF(m), m = 0 .. m_max
  std::vector<Rational> poly_coeffs;    // c_0 .. c_n; empty when P = 0
  long onset_m0 = 0;
  int dim_n = -1;
  std::int64_t degree_d = 0;
  Rational mu;
};

/// 2 * (max generator degree) * n + 8, with n the projective dimension.
int default_m_max(const MonomialIdeal& ideal);

/// Samples HF on 0 .. m_max and fits the Hilbert polynomial. Its degree is
/// the projective dimension n; the fit needs n + 3 vanishing order-(n+1)
/// differences and a spot check at m_max + 2. Invariants are filled in when
/// P is nonzero. Throws StabilizationError.
HilbertProfile hilbert_polynomial(const MonomialIdeal& ideal, int m_max,
                                  HilbertPath path = HilbertPath::series);

/// n = deg P, d = n! c_n, mu = 2 n! c_{n-1} / d. Throws InputError when P is
/// zero or d is not a positive integer.
GeometricInvariants geometric_invariants(const HilbertProfile& profile);

}  // namespace futaki
