#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "futaki/monomial.hpp"

namespace futaki {

/// Monomial ideal stored by its minimal generators (an antichain under
/// divisibility), sorted grevlex-descending.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t num_vars) : num_vars_(num_vars) {}
  /// Minimalizes `generators`; duplicates and redundant multiples are dropped.
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const Monomial& m) const;

  /// M + (m)
  MonomialIdeal plus(const Monomial& m) const;
  /// M : (m)
  MonomialIdeal quotient(const Monomial& m) const;

  int max_degree() const;
  /// Krull dimension of S/M: the largest set of variables that supports no
  /// generator. Projective dimension is this minus one.
  int krull_dimension() const;

  std::string str() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> gens_;
};

}  // namespace futaki
