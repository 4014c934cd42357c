#include "futaki/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "futaki/errors.hpp"
#include "futaki/interpolation.hpp"

namespace futaki {

namespace {

const std::int64_t& value_at(const WeightTable& values, long m) {
  auto it = values.find(m);
  if (it == values.end()) throw std::out_of_range("missing weight value for m = " + std::to_string(m));
  return it->second;
}

BigInt alternating_sum(const WeightTable& values, int order, long m) {
  BigInt total = 0;
  for (int i = 0; i <= order; ++i) {
    const BigInt term = binomial(order, i) * BigInt(static_cast<long>(value_at(values, m + i)));
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Fits every sample in [m_from, m_to] exactly and insists on at least one
// sample beyond what the fitted degree needs.
std::vector<Rational> fit_range(const std::map<long, Rational>& samples, long m_from, long m_to,
                                const char* what) {
  std::vector<Rational> ys;
  for (long m = m_from; m <= m_to; ++m) {
    auto it = samples.find(m);
    if (it == samples.end()) throw std::out_of_range(std::string("missing ") + what + " value at m = " + std::to_string(m));
    ys.push_back(it->second);
  }
  auto coeffs = trimmed(interpolate_consecutive(m_from, ys));
  if (coeffs.size() + 1 > ys.size()) {
    throw StabilizationError(std::string("no stabilization detected: ") + what + " table not polynomial on [" +
                             std::to_string(m_from) + ", " + std::to_string(m_to) + "]");
  }
  return coeffs;
}

Rational coeff_or_zero(const std::vector<Rational>& c, int k) {
  return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : Rational(0);
}

}  // namespace

std::int64_t hilbert_weight(const MonomialIdeal& lead, const OneParameterSubgroup& lambda, int m) {
  if (lambda.num_vars() != lead.num_vars()) throw InputError("weight vector length mismatch");
  std::int64_t sum = 0;
  for (const auto& mono : standard_monomials(lead, m)) sum += lambda.pairing(mono);
  return kHilbertPointSign * sum;
}

WeightProfile fit_weight_profile(const WeightTable& values, int n) {
  std::map<long, Rational> samples;
  for (const auto& [m, w] : values) samples.emplace(m, Rational(w));
  const auto fit = fit_stable_tail(samples, n + 1, n + 3);
  WeightProfile wp;
  wp.values = values;
  wp.a_coeffs = fit.coeffs;
  wp.onset_m0 = fit.onset;
  return wp;
}

WeightProfile weight_profile(const MonomialIdeal& lead, const OneParameterSubgroup& lambda, int n, int m_max) {
  WeightTable values;
  for (int m = 0; m <= m_max; ++m) values[m] = hilbert_weight(lead, lambda, m);
  std::map<long, Rational> samples;
  for (const auto& [m, w] : values) samples.emplace(m, Rational(w));
  const auto fit = fit_stable_tail(samples, n + 1, n + 3, [&](long m) {
    return Rational(hilbert_weight(lead, lambda, static_cast<int>(m)));
  });
  WeightProfile wp;
  wp.values = std::move(values);
  wp.a_coeffs = fit.coeffs;
  wp.onset_m0 = fit.onset;
  return wp;
}

Rational futaki_F1(const Rational& a_top, const Rational& a_sub, int n, std::int64_t d, const Rational& mu) {
  if (d <= 0) throw InputError("degree must be positive");
  const Rational scale = Rational(factorial(static_cast<unsigned>(n))) / Rational(2 * d);
  return scale * (Rational(2) * a_sub - mu * a_top);
}

Rational futaki_F1(const WeightProfile& wp, const HilbertProfile& hp) {
  const auto inv = geometric_invariants(hp);
  if (static_cast<int>(wp.a_coeffs.size()) > inv.n + 2) {
    throw InputError("weight profile degree exceeds n + 1");
  }
  return futaki_F1(wp.a(inv.n + 1), wp.a(inv.n), inv.n, inv.d, inv.mu);
}

Rational cm_weight(const Rational& F1, std::int64_t d, int n) {
  return Rational(2 * d * (n + 1)) * F1;
}

BigInt lift_weight_L1(const WeightTable& values, int n, long m) { return alternating_sum(values, n, m); }

BigInt lift_weight_L2(const WeightTable& values, int n, long m) { return alternating_sum(values, n + 1, m); }

Rational lift_weight_total(const WeightTable& values, int n, const Rational& mu, long m) {
  const Rational l1(lift_weight_L1(values, n, m));
  const Rational l2(lift_weight_L2(values, n, m));
  const Rational inner = Rational(2 * (n + 1)) * (l1 + Rational(m) * l2) + (mu + Rational(n * (n + 1))) * l2;
  return n % 2 == 0 ? inner : -inner;
}

IndependenceResult verify_m_independence(const IndependenceInputs& in, long m_from, long m_to) {
  if (in.values == nullptr) throw std::invalid_argument("no weight values");
  if (m_from > m_to) throw InputError("empty m range");
  if (m_from < in.onset) {
    throw InputError("range below onset: m_from = " + std::to_string(m_from) + " < onset " +
                     std::to_string(in.onset));
  }
  IndependenceResult r;
  r.target = Rational(factorial(static_cast<unsigned>(in.n + 1))) * (Rational(2) * in.a_sub - in.mu * in.a_top);
  r.cm = in.cm_weight;
  for (long m = m_from; m <= m_to; ++m) {
    LiftRow row{m, lift_weight_L1(*in.values, in.n, m), lift_weight_L2(*in.values, in.n, m), {}};
    row.total = lift_weight_total(*in.values, in.n, in.mu, m);
    if (row.total != r.target) r.mismatched.push_back(m);
    r.rows.push_back(std::move(row));
  }
  const bool cm_ok = !r.cm || *r.cm == r.target;
  r.pass = r.mismatched.empty() && cm_ok;
  if (!r.mismatched.empty()) {
    r.message = "A(m) differs from " + r.target.str() + " at m =";
    for (long m : r.mismatched) r.message += " " + std::to_string(m);
  } else if (!cm_ok) {
    r.message = "lift constant " + r.target.str() + " differs from CM weight " + r.cm->str();
  } else {
    r.message = "constant " + r.target.str() + " on [" + std::to_string(m_from) + ", " + std::to_string(m_to) + "]";
  }
  return r;
}

BigInt binomial_sum(int n, int k, long m) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial_sum needs n, k >= 0");
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), BigInt(m + i).get_mpz_t(), static_cast<unsigned long>(k));
    const BigInt term = binomial(n, i) * power;
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Rational binomial_closed_form(int n, int k, long m) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial_closed_form needs n, k >= 0");
  if (k > n + 1) throw std::invalid_argument("closed form defined only for k <= n + 1");
  const Rational sign(n % 2 == 0 ? 1 : -1);
  if (k == n + 1) {
    return sign * (Rational(m) + Rational(n) / Rational(2)) * Rational(factorial(static_cast<unsigned>(n + 1)));
  }
  if (k == n) return sign * Rational(factorial(static_cast<unsigned>(n)));
  return Rational(0);
}

Rational f1_via_expansion(const WeightTable& values, const std::map<long, std::int64_t>& hf_values,
                          long m_from, long m_to) {
  std::map<long, Rational> w, h;
  for (const auto& [m, v] : values) w.emplace(m, Rational(v));
  for (const auto& [m, v] : hf_values) h.emplace(m, Rational(v));
  const auto p = fit_range(h, m_from, m_to, "Hilbert function");
  const auto a = fit_range(w, m_from, m_to, "weight");
  if (p.empty()) throw InputError("Hilbert polynomial is zero: empty scheme");
  const int n = static_cast<int>(p.size()) - 1;
  if (static_cast<int>(a.size()) > n + 2) throw InvariantViolation("weight polynomial degree exceeds n + 1");
  // m P(m): b_k = c_{k-1}
  const Rational b_top = coeff_or_zero(p, n);
  const Rational b_sub = coeff_or_zero(p, n - 1);
  const Rational a_top = coeff_or_zero(a, n + 1);
  const Rational a_sub = coeff_or_zero(a, n);
  return (a_sub * b_top - a_top * b_sub) / (b_top * b_top);
}

Rational chow_weight_leading(const WeightProfile& wp, int n) {
  return Rational(factorial(static_cast<unsigned>(n + 1))) * wp.a(n + 1);
}

StabilityReport build_stability_report(const HilbertProfile& hp, const WeightProfile& wp, int lift_points) {
  const auto inv = geometric_invariants(hp);
  if (static_cast<int>(trimmed(wp.a_coeffs).size()) > inv.n + 2) {
    throw InvariantViolation("weight polynomial degree exceeds n + 1");
  }
  StabilityReport r;
  r.n = inv.n;
  r.d = inv.d;
  r.mu = inv.mu;
  r.a_top = wp.a(inv.n + 1);
  r.a_sub = wp.a(inv.n);
  r.F1 = futaki_F1(r.a_top, r.a_sub, r.n, r.d, r.mu);
  r.w_cm = cm_weight(r.F1, r.d, r.n);
  r.chow_top = chow_weight_leading(wp, r.n);
  r.chow_coupling = Rational(2 * r.d) + r.mu / Rational(r.n + 1) - Rational(r.n + 2);

  const long m_from = std::max(wp.onset_m0, hp.onset_m0);
  const long last = wp.values.empty() ? -1 : wp.values.rbegin()->first;
  const long m_to = std::min(m_from + lift_points - 1, last - (r.n + 1));
  if (m_to - m_from + 1 < 5) {
    throw StabilizationError("no stabilization detected: fewer than 5 lift points above onset " +
                             std::to_string(m_from));
  }
  IndependenceInputs in{&wp.values, r.n, r.mu, r.a_top, r.a_sub, r.w_cm, m_from};
  r.independence = verify_m_independence(in, m_from, m_to);
  r.lift_constant = r.independence.rows.front().total;

  const long hf_last = hp.values.empty() ? -1 : hp.values.rbegin()->first;
  try {
    r.F1_expansion = f1_via_expansion(wp.values, hp.values, m_from, std::min(last, hf_last));
  } catch (const StabilizationError&) {
    r.F1_expansion.reset();
  }
  r.routes_agree = r.F1_expansion == r.F1 && r.F1 == r.w_cm / Rational(2 * r.d * (r.n + 1)) &&
                   r.independence.target == r.w_cm;
  return r;
}

}  // namespace futaki
