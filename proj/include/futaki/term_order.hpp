#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "futaki/monomial.hpp"

namespace futaki {

/// Diagonal one-parameter subgroup lambda(t) . x_i = t^{w_i} x_i.
/// The zero vector is allowed (trivial subgroup).
class OneParameterSubgroup {
 public:
  OneParameterSubgroup() = default;
  explicit OneParameterSubgroup(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}

  std::size_t num_vars() const noexcept { return weights_.size(); }
  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  bool is_trivial() const;

  std::int64_t pairing(const Monomial& m) const { return m.pairing(weights_); }

  /// w -> w + shift * (1, ..., 1)
  OneParameterSubgroup translated(std::int64_t shift) const;
  /// w -> factor * w
  OneParameterSubgroup scaled(std::int64_t factor) const;

  std::string str() const;

  friend bool operator==(const OneParameterSubgroup&, const OneParameterSubgroup&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

/// Monomial order: graded reverse lexicographic, optionally refined by a
/// weight vector. The weighted order compares total degree first, then
/// <w, alpha> (larger wins), then grevlex, so on monomials of equal degree
/// it is exactly "weight first, grevlex tiebreak".
class TermOrder {
 public:
  enum class Kind { grevlex, weighted };

  static TermOrder grevlex() { return TermOrder(Kind::grevlex, {}); }
  static TermOrder weighted(OneParameterSubgroup w) { return TermOrder(Kind::weighted, std::move(w)); }

  Kind kind() const noexcept { return kind_; }
  const OneParameterSubgroup& weight() const noexcept { return weight_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, OneParameterSubgroup w) : kind_(kind), weight_(std::move(w)) {}

  Kind kind_;
  OneParameterSubgroup weight_;
};

/// Throws std::invalid_argument on a variable-count mismatch.
std::strong_ordering mono_compare(const TermOrder& order, const Monomial& a, const Monomial& b);

}  // namespace futaki
