#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "futaki/monomial.hpp"
#include "futaki/rational.hpp"

namespace futaki {

/// Sparse polynomial over Q in a fixed number of positional variables.
/// Terms are kept grevlex-descending with no zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial term(const Monomial& m, const Rational& c = Rational(1));
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);
  /// this += c * m * other
  void add_scaled(const Rational& c, const Monomial& m, const Polynomial& other);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Canonical form: terms in storage order, explicit `*` and `^`,
  /// e.g. "x0*x2 - x1^2". The zero polynomial prints as "0".
  std::string str() const;

 private:
  void require_same_ring(const Polynomial& o) const;

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };

/// Throws InputError on mismatched variable counts.
Polynomial apply(ArithOp op, const Polynomial& p, const Polynomial& q);

enum class Homogeneity { homogeneous, inhomogeneous, zero };

struct DegreeInfo {
  Homogeneity kind;
  int degree;  // meaningful only when kind == homogeneous
};

DegreeInfo homogeneous_degree(const Polynomial& p);

/// Homogeneous ideal given by nonzero homogeneous generators.
class Ideal {
 public:
  Ideal() = default;
  /// Throws InputError naming the offending generator index when a generator
  /// is zero, inhomogeneous, or lives in the wrong number of variables.
  Ideal(std::size_t num_vars, std::vector<Polynomial> generators);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  int max_degree() const;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Polynomial> generators_;
};

}  // namespace futaki
