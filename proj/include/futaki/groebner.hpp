#pragma once

#include <span>
#include <vector>

#include "futaki/monomial_ideal.hpp"
#include "futaki/polynomial.hpp"
#include "futaki/term_order.hpp"

namespace futaki {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Largest term of a nonzero polynomial under `order`.
Term leading_term(const Polynomial& p, const TermOrder& order);

/// p divided by its leading coefficient.
Polynomial make_monic(const Polynomial& p, const TermOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Full reduction of `f` by `basis`: no term of the result is divisible by
/// the leading monomial of a basis element.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& order);

struct GroebnerBasis {
  std::vector<Polynomial> generators;  // monic, sorted by leading monomial, descending
  TermOrder order = TermOrder::grevlex();
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const;
};

/// Reduced Groebner basis of a homogeneous ideal. Output is independent of
/// generator order. Throws InputError if a generator is inhomogeneous.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order);

/// Every S-polynomial of `generators` reduces to zero.
bool satisfies_s_pair_criterion(std::span<const Polynomial> generators, const TermOrder& order);

/// Monic, and no term of any element is divisible by another element's lead.
bool is_reduced(std::span<const Polynomial> generators, const TermOrder& order);

/// Terms of `p` maximizing <w, alpha>.
Polynomial initial_form(const Polynomial& p, const OneParameterSubgroup& lambda);

/// Degeneration of V(ideal) under lambda(t) as t -> 0.
struct FlatLimit {
  GroebnerBasis basis;   // reduced, under the weighted order for lambda
  Ideal initial_forms;   // w-initial forms of `basis`
  MonomialIdeal lead;    // lead-monomial ideal, used for all counting
};

/// Throws InputError if lambda has the wrong length.
FlatLimit flat_limit(const Ideal& ideal, const OneParameterSubgroup& lambda);

}  // namespace futaki
