#include "futaki/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace futaki {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  if (index >= num_vars) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(num_vars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.num_vars() != num_vars()) throw std::invalid_argument("monomial variable count mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

std::int64_t Monomial::pairing(std::span<const std::int64_t> weights) const {
  if (weights.size() != exps_.size()) throw std::invalid_argument("weight vector length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) s += weights[i] * exps_[i];
  return s;
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomial variable count mismatch");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

namespace {

// Fills positions [0, last] with exponents summing to `remaining`, iterating
// the highest-index variable slowest-to-fastest from 0 upward.
void fill_grevlex(std::vector<int>& e, std::size_t last, int remaining, std::vector<Monomial>& out) {
  if (last == 0) {
    e[0] = remaining;
    out.emplace_back(e);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    e[last] = k;
    fill_grevlex(e, last - 1, remaining - k, out);
  }
  e[last] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree) {
  std::vector<Monomial> out;
  if (num_vars == 0 || degree < 0) return out;
  std::vector<int> e(num_vars, 0);
  fill_grevlex(e, num_vars - 1, degree, out);
  return out;
}

}  // namespace futaki
