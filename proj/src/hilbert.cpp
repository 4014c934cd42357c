#include "futaki/hilbert.hpp"

#include <algorithm>
#include <map>

#include "futaki/errors.hpp"
#include "futaki/interpolation.hpp"

namespace futaki {

namespace {

using Series = std::vector<BigInt>;

void add_shifted(Series& acc, const Series& s, int shift) {
  if (acc.size() < s.size() + static_cast<std::size_t>(shift)) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] += s[i];
}

// Generators are pure powers of distinct variables (or there are none).
bool is_base_case(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    int support = 0;
    for (int e : g.exponents()) support += e > 0;
    if (support > 1) return false;
  }
  return true;
}

Series numerator(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return {};
  if (is_base_case(ideal)) {
    Series s{1};
    for (const auto& g : ideal.generators()) {
      Series factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] = -1;
      Series next(s.size() + factor.size() - 1, 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += s[i] * factor[j];
      }
      s = std::move(next);
    }
    return s;
  }
  // Pivot on the variable occurring in the most mixed generators.
  const std::size_t nv = ideal.num_vars();
  std::vector<int> count(nv, 0);
  for (const auto& g : ideal.generators()) {
    int support = 0;
    for (int e : g.exponents()) support += e > 0;
    if (support < 2) continue;
    for (std::size_t i = 0; i < nv; ++i) count[i] += g[i] > 0;
  }
  const auto pivot_var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  const Monomial pivot = Monomial::variable(nv, pivot_var);
  Series out = numerator(ideal.plus(pivot));
  add_shifted(out, numerator(ideal.quotient(pivot)), 1);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int m) {
  std::vector<Monomial> out;
  if (m < 0) return out;
  for (auto& mono : monomials_of_degree(ideal.num_vars(), m)) {
    if (!ideal.contains(mono)) out.push_back(std::move(mono));
  }
  return out;
}

std::int64_t hilbert_function_enumerated(const MonomialIdeal& ideal, int m) {
  if (m < 0) return 0;
  std::int64_t count = 0;
  for (const auto& mono : monomials_of_degree(ideal.num_vars(), m)) count += !ideal.contains(mono);
  return count;
}

std::vector<BigInt> hilbert_series_numerator(const MonomialIdeal& ideal) { return numerator(ideal); }

std::int64_t hilbert_function_from_series(std::span<const BigInt> numerator, std::size_t num_vars, int m) {
  // [t^m] N(t) / (1-t)^k = sum_j N_j C(m - j + k - 1, k - 1)
  if (m < 0) return 0;
  BigInt total = 0;
  const long k = static_cast<long>(num_vars);
  for (std::size_t j = 0; j < numerator.size() && static_cast<int>(j) <= m; ++j) {
    total += numerator[j] * binomial(m - static_cast<long>(j) + k - 1, k - 1);
  }
  return total.get_si();
}

std::int64_t hilbert_function(const MonomialIdeal& ideal, int m, HilbertPath path) {
  if (path == HilbertPath::enumeration) return hilbert_function_enumerated(ideal, m);
  const auto num = numerator(ideal);
  return hilbert_function_from_series(num, ideal.num_vars(), m);
}

int default_m_max(const MonomialIdeal& ideal) {
  const int n = std::max(ideal.krull_dimension() - 1, 0);
  return 2 * std::max(ideal.max_degree(), 1) * n + 8;
}

HilbertProfile hilbert_polynomial(const MonomialIdeal& ideal, int m_max, HilbertPath path) {
  HilbertProfile profile;
  const int n = ideal.krull_dimension() - 1;

  std::vector<BigInt> series;
  if (path == HilbertPath::series) series = numerator(ideal);
  auto hf = [&](long m) {
    return path == HilbertPath::series
               ? hilbert_function_from_series(series, ideal.num_vars(), static_cast<int>(m))
               : hilbert_function_enumerated(ideal, static_cast<int>(m));
  };

  std::map<long, Rational> samples;
  for (long m = 0; m <= m_max; ++m) {
    profile.values[m] = hf(m);
    samples.emplace(m, Rational(profile.values[m]));
  }
  const auto fit = fit_stable_tail(samples, n, n + 3, [&](long m) { return Rational(hf(m)); });
  profile.poly_coeffs = trimmed(fit.coeffs);
  profile.onset_m0 = fit.onset;
  profile.dim_n = static_cast<int>(profile.poly_coeffs.size()) - 1;
  if (profile.dim_n != n) {
    throw InvariantViolation("Hilbert polynomial degree " + std::to_string(profile.dim_n) +
                             " differs from the combinatorial dimension " + std::to_string(n));
  }
  if (!profile.poly_coeffs.empty()) {
    const auto inv = geometric_invariants(profile);
    profile.degree_d = inv.d;
    profile.mu = inv.mu;
  }
  return profile;
}

GeometricInvariants geometric_invariants(const HilbertProfile& profile) {
  const auto coeffs = trimmed(profile.poly_coeffs);
  if (coeffs.empty()) throw InputError("Hilbert polynomial is zero: empty scheme");
  GeometricInvariants inv;
  inv.n = static_cast<int>(coeffs.size()) - 1;
  const Rational nfact(factorial(static_cast<unsigned>(inv.n)));
  const Rational d = nfact * coeffs.back();
  if (!d.is_integer() || d.sign() <= 0) {
    throw InputError("non-geometric Hilbert polynomial: n! * leading coefficient = " + d.str());
  }
  inv.d = d.numerator().get_si();
  const Rational sub = inv.n >= 1 ? coeffs[inv.n - 1] : Rational(0);
  inv.mu = Rational(2) * nfact * sub / d;
  return inv;
}

}  // namespace futaki
