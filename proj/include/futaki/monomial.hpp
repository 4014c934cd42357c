#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace futaki {

/// Exponent vector x0^e0 * ... * xN^eN.
class Monomial {
 public:
  Monomial() = default;
  /// The constant monomial 1 in `num_vars` variables.
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  /// Throws std::invalid_argument on a negative exponent.
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Exact quotient; the caller guarantees `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;

  /// <w, alpha>
  std::int64_t pairing(std::span<const std::int64_t> weights) const;

  /// "x0*x2^2", or "1" for the constant monomial.
  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic: higher degree first; at equal degree
/// a > b iff the last nonzero entry of exps(a) - exps(b) is negative.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// All monomials of total degree `degree`, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree);

}  // namespace futaki

template <>
struct std::hash<futaki::Monomial> {
  std::size_t operator()(const futaki::Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    return h;
  }
};
