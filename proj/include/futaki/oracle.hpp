#pragma once

#include <cstdint>
#include <vector>

#include "futaki/monomial_ideal.hpp"
#include "futaki/polynomial.hpp"
#include "futaki/term_order.hpp"

namespace futaki {

// Brute-force reference computations. Nothing here touches the Groebner or
// Hilbert-series code paths.

struct OracleRow {
  Monomial monomial;
  std::int64_t weight;  // <w, alpha>
};

struct OracleDump {
  int m = 0;
  std::vector<OracleRow> rows;  // grevlex-descending
  std::int64_t count = 0;
  std::int64_t weight_sum = 0;
  std::int64_t hilbert_weight = 0;  // -weight_sum
};

inline constexpr std::uint64_t kOracleGuard = 1'000'000;

/// Walks every degree-m exponent vector with an odometer, keeps those not
/// divisible by any generator of `lead`. Throws InputError when
/// C(m + N, N) exceeds `guard`.
OracleDump brute_force_dump(const MonomialIdeal& lead, const OneParameterSubgroup& lambda, int m,
                            std::uint64_t guard = kOracleGuard);

/// dim_Q (S/I)_m = C(m+N, N) - rank of { x^beta * g : deg(x^beta g) = m },
/// by exact sparse Gaussian elimination over Q.
std::int64_t hilbert_function_linear_algebra(const Ideal& ideal, int m);

}  // namespace futaki
