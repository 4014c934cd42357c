#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "futaki/hilbert.hpp"
#include "futaki/monomial_ideal.hpp"
#include "futaki/rational.hpp"
#include "futaki/term_order.hpp"

namespace futaki {

/// Weight table m -> w(Hilb_m).
using WeightTable = std::map<long, std::int64_t>;

/// Sign applied to the summed torus weight of the standard monomials. The
/// m-th Hilbert point lives in the dual exterior power, hence -1.
inline constexpr int kHilbertPointSign = -1;

/// w(Hilb_m) = -sum of <w, alpha> over the degree-m standard monomials of
/// the lead ideal of the flat limit.
std::int64_t hilbert_weight(const MonomialIdeal& lead, const OneParameterSubgroup& lambda, int m);

struct WeightProfile {
  WeightTable values;
  std::vector<Rational> a_coeffs;  // a_0 .. a_{n+1}
  long onset_m0 = 0;

  Rational a(int k) const { return k >= 0 && k < static_cast<int>(a_coeffs.size()) ? a_coeffs[k] : Rational(0); }
};

/// Samples w(Hilb_m) for m = 0 .. m_max and fits the degree-(n+1) tail
/// (order n+2 differences, n+3 confirmations, spot check at m_max + 2).
WeightProfile weight_profile(const MonomialIdeal& lead, const OneParameterSubgroup& lambda, int n, int m_max);

/// Fits an already sampled weight table.
WeightProfile fit_weight_profile(const WeightTable& values, int n);

/// (n! / 2d) (2 a_n - mu a_{n+1})
Rational futaki_F1(const WeightProfile& wp, const HilbertProfile& hp);
Rational futaki_F1(const Rational& a_top, const Rational& a_sub, int n, std::int64_t d, const Rational& mu);

/// 2 d (n+1) F1
Rational cm_weight(const Rational& F1, std::int64_t d, int n);

/// sum_{i=0}^{n} (-1)^i C(n, i) w(Hilb_{m+i}). Throws std::out_of_range when
/// a needed value is missing.
BigInt lift_weight_L1(const WeightTable& values, int n, long m);
/// sum_{i=0}^{n+1} (-1)^i C(n+1, i) w(Hilb_{m+i})
BigInt lift_weight_L2(const WeightTable& values, int n, long m);

/// A(m) = (-1)^n [2(n+1)(L1 + m L2) + (mu + n(n+1)) L2]
Rational lift_weight_total(const WeightTable& values, int n, const Rational& mu, long m);

struct LiftRow {
  long m;
  BigInt L1;
  BigInt L2;
  Rational total;
};

struct IndependenceResult {
  std::vector<LiftRow> rows;
  Rational target;                      // (n+1)! (2 a_n - mu a_{n+1})
  std::optional<Rational> cm;           // 2d(n+1)F1 when supplied
  bool pass = false;
  std::vector<long> mismatched;         // m values whose A(m) != target
  std::string message;
};

struct IndependenceInputs {
  const WeightTable* values = nullptr;
  int n = 0;
  Rational mu;
  Rational a_top;
  Rational a_sub;
  std::optional<Rational> cm_weight;  // compared against the target too
  long onset = 0;
};

/// Checks that A(m) is the same for every m in [m_from, m_to], equal to
/// (n+1)!(2a_n - mu a_{n+1}) and to the CM weight. Throws InputError when
/// m_from is below the onset or the range is empty.
IndependenceResult verify_m_independence(const IndependenceInputs& in, long m_from, long m_to);

/// sum_{i=0}^{n} (-1)^i C(n, i) (m + i)^k
BigInt binomial_sum(int n, int k, long m);
/// Closed form of binomial_sum; defined for k <= n + 1 only.
Rational binomial_closed_form(int n, int k, long m);

/// Coefficient of 1/m in w(Hilb_m) / (m P(m)), i.e.
/// (a_n b_{n+1} - a_{n+1} b_n) / b_{n+1}^2 with m P(m) = sum b_k m^k.
/// Both tables are interpolated over [m_from, m_to] and must show at least
/// one confirming sample beyond the fitted degree. Throws StabilizationError.
Rational f1_via_expansion(const WeightTable& values, const std::map<long, std::int64_t>& hf_values,
                          long m_from, long m_to);

/// (n+1)! a_{n+1}
Rational chow_weight_leading(const WeightProfile& wp, int n);

struct StabilityReport {
  int n = 0;
  std::int64_t d = 0;
  Rational mu;
  Rational a_top;
  Rational a_sub;
  Rational F1;
  std::optional<Rational> F1_expansion;  // empty when the tables do not stabilize
  Rational w_cm;
  Rational chow_top;
  Rational lift_constant;
  IndependenceResult independence;
  bool routes_agree = false;
  /// 2d + mu/(n+1) - (n+2); recorded only.
  Rational chow_coupling;
};

/// Assembles every invariant from the two profiles. The lift table covers
/// `lift_points` consecutive m starting at the later of the two onsets.
StabilityReport build_stability_report(const HilbertProfile& hp, const WeightProfile& wp, int lift_points = 7);

}  // namespace futaki
