#include "futaki/oracle.hpp"

#include <algorithm>
#include <map>

#include "futaki/errors.hpp"

namespace futaki {

namespace {

// Next exponent vector of fixed total degree in lexicographic order; false
// once exhausted.
bool next_composition(std::vector<int>& e) {
  const std::size_t n = e.size();
  if (n < 2) return false;
  // Find the rightmost position (excluding the last) with a nonzero entry.
  std::size_t i = n - 1;
  while (i-- > 0) {
    if (e[i] > 0) break;
    if (i == 0) return false;
  }
  if (e[i] == 0) return false;
  const int tail = e[n - 1];
  e[n - 1] = 0;
  e[i] -= 1;
  e[i + 1] = tail + 1;
  return true;
}

}  // namespace

OracleDump brute_force_dump(const MonomialIdeal& lead, const OneParameterSubgroup& lambda, int m,
                            std::uint64_t guard) {
  const std::size_t nv = lead.num_vars();
  if (lambda.num_vars() != nv) throw InputError("weight vector length mismatch");
  if (m < 0) throw InputError("degree must be non-negative");
  const BigInt total = binomial(m + static_cast<long>(nv) - 1, static_cast<long>(nv) - 1);
  if (total > BigInt(static_cast<unsigned long>(guard))) {
    throw InputError("oracle guard exceeded: C(m+N, N) = " + total.get_str() + " > " + std::to_string(guard));
  }
  OracleDump dump;
  dump.m = m;
  if (nv == 0) return dump;
  std::vector<int> e(nv, 0);
  e[0] = m;
  do {
    bool divisible = false;
    for (const auto& g : lead.generators()) {
      bool divides = true;
      for (std::size_t i = 0; i < nv && divides; ++i) divides = g[i] <= e[i];
      if (divides) {
        divisible = true;
        break;
      }
    }
    if (!divisible) {
      std::int64_t w = 0;
      for (std::size_t i = 0; i < nv; ++i) w += lambda.weights()[i] * e[i];
      dump.rows.push_back({Monomial(e), w});
      dump.weight_sum += w;
    }
  } while (next_composition(e));
  std::sort(dump.rows.begin(), dump.rows.end(),
            [](const OracleRow& a, const OracleRow& b) { return grevlex_compare(a.monomial, b.monomial) > 0; });
  dump.count = static_cast<std::int64_t>(dump.rows.size());
  dump.hilbert_weight = -dump.weight_sum;
  return dump;
}

std::int64_t hilbert_function_linear_algebra(const Ideal& ideal, int m) {
  const std::size_t nv = ideal.num_vars();
  if (m < 0) return 0;
  // Pivot rows keyed by their leading column (largest monomial in storage
  // order); each row is normalized to leading coefficient 1.
  std::map<Monomial, Polynomial, GrevlexGreater> pivots;
  for (const auto& g : ideal.generators()) {
    const int dg = homogeneous_degree(g).degree;
    if (dg > m) continue;
    for (const auto& shift : monomials_of_degree(nv, m - dg)) {
      Polynomial row(nv);
      row.add_scaled(Rational(1), shift, g);
      while (!row.is_zero()) {
        const Monomial lead = row.terms().begin()->first;
        const Rational coeff = row.terms().begin()->second;
        auto it = pivots.find(lead);
        if (it == pivots.end()) {
          pivots.emplace(lead, (Rational(1) / coeff) * row);
          break;
        }
        row.add_scaled(-coeff, Monomial(nv), it->second);
      }
    }
  }
  const BigInt all = binomial(m + static_cast<long>(nv) - 1, static_cast<long>(nv) - 1);
  return all.get_si() - static_cast<std::int64_t>(pivots.size());
}

}  // namespace futaki
