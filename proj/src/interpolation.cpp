#include "futaki/interpolation.hpp"

#include <stdexcept>
#include <string>

#include "futaki/errors.hpp"

namespace futaki {

std::vector<Rational> interpolate_consecutive(long first_x, std::span<const Rational> ys) {
  const std::size_t n = ys.size();
  // Newton form on nodes first_x, first_x + 1, ...: divided differences are
  // forward differences divided by k!.
  std::vector<Rational> table(ys.begin(), ys.end());
  std::vector<Rational> newton;
  newton.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    newton.push_back(table[0] / Rational(factorial(static_cast<unsigned>(k))));
    for (std::size_t i = 0; i + 1 < table.size(); ++i) table[i] = table[i + 1] - table[i];
    if (!table.empty()) table.pop_back();
  }
  // Expand sum newton[k] * prod_{i<k} (x - first_x - i) into the monomial basis.
  std::vector<Rational> coeffs(n, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += newton[k] * basis[j];
    const Rational root(first_x + static_cast<long>(k));
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= root * basis[j];
    }
    basis = std::move(next);
  }
  return coeffs;
}

Rational evaluate(std::span<const Rational> coeffs, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::vector<Rational> trimmed(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

std::vector<Rational> forward_differences(std::span<const Rational> ys, int order) {
  std::vector<Rational> d(ys.begin(), ys.end());
  for (int k = 0; k < order && !d.empty(); ++k) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  return d;
}

TailFit fit_stable_tail(const std::map<long, Rational>& samples, int degree, int confirmations,
                        const std::function<Rational(long)>& spot_check) {
  if (samples.empty()) throw StabilizationError("no stabilization detected: no samples");
  const long first = samples.begin()->first;
  const long last = samples.rbegin()->first;
  std::vector<Rational> ys;
  ys.reserve(samples.size());
  long expect = first;
  for (const auto& [x, y] : samples) {
    if (x != expect) throw std::invalid_argument("samples are not consecutive");
    ys.push_back(y);
    ++expect;
  }

  const auto diffs = forward_differences(ys, degree + 1);
  int vanishing = 0;
  for (auto it = diffs.rbegin(); it != diffs.rend() && it->is_zero(); ++it) ++vanishing;
  if (vanishing < confirmations) {
    throw StabilizationError("no stabilization detected: order-" + std::to_string(degree + 1) +
                             " differences vanish on only " + std::to_string(vanishing) +
                             " trailing samples, need " + std::to_string(confirmations));
  }

  TailFit fit;
  if (degree < 0) {
    fit.coeffs = {};
  } else {
    const std::size_t k = static_cast<std::size_t>(degree) + 1;
    fit.coeffs = interpolate_consecutive(last - static_cast<long>(k) + 1,
                                         std::span<const Rational>(ys).last(k));
  }
  fit.onset = last + 1;
  for (long x = last; x >= first; --x) {
    if (evaluate(fit.coeffs, Rational(x)) != ys[static_cast<std::size_t>(x - first)]) break;
    fit.onset = x;
  }
  if (spot_check) {
    const long probe = last + 2;
    if (spot_check(probe) != evaluate(fit.coeffs, Rational(probe))) {
      throw StabilizationError("no stabilization detected: spot check at m = " + std::to_string(probe) +
                               " disagrees with the fitted polynomial");
    }
  }
  if (degree >= 0) fit.coeffs.resize(static_cast<std::size_t>(degree) + 1, Rational(0));
  return fit;
}

}  // namespace futaki
