#include "futaki/polynomial.hpp"

#include <algorithm>

#include "futaki/errors.hpp"

namespace futaki {

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars), c);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.num_vars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  return term(Monomial::variable(num_vars, index));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.num_vars() != num_vars_) throw InputError("monomial variable count mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& other) {
  require_same_ring(other);
  if (c.is_zero()) return;
  for (const auto& [mono, coeff] : other.terms_) add_term(mono * m, c * coeff);
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (o.num_vars_ != num_vars_) {
    throw InputError("polynomials in " + std::to_string(num_vars_) + " and " +
                     std::to_string(o.num_vars_) + " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial r(a.num_vars_);
  for (const auto& [m, c] : a.terms_) r.add_scaled(c, m, b);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.num_vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * coeff);
  return r;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c : c;
    if (m.is_one()) {
      out += magnitude.short_str();
    } else {
      if (magnitude != Rational(1)) out += magnitude.short_str() + "*";
      out += m.str();
    }
    first = false;
  }
  return out;
}

Polynomial apply(ArithOp op, const Polynomial& p, const Polynomial& q) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  return Polynomial(p.num_vars());
}

DegreeInfo homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return {Homogeneity::zero, 0};
  const int d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) return {Homogeneity::inhomogeneous, 0};
  }
  return {Homogeneity::homogeneous, d};
}

Ideal::Ideal(std::size_t num_vars, std::vector<Polynomial> generators)
    : num_vars_(num_vars), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.num_vars() != num_vars_) {
      throw InputError("generator " + std::to_string(i) + " has " + std::to_string(g.num_vars()) +
                       " variables, expected " + std::to_string(num_vars_));
    }
    switch (homogeneous_degree(g).kind) {
      case Homogeneity::zero:
        throw InputError("generator " + std::to_string(i) + " is zero");
      case Homogeneity::inhomogeneous:
        throw InputError("generator " + std::to_string(i) + " is not homogeneous: " + g.str());
      case Homogeneity::homogeneous:
        break;
    }
  }
}

int Ideal::max_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, homogeneous_degree(g).degree);
  return d;
}

}  // namespace futaki
