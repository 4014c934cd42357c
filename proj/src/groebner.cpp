#include "futaki/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "futaki/errors.hpp"

namespace futaki {

namespace {

struct OrderGreater {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

using OrderedTerms = std::map<Monomial, Rational, OrderGreater>;

void add_into(OrderedTerms& acc, const Monomial& m, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

struct Reducer {
  Monomial lead;
  Rational lead_coeff;
  const Polynomial* poly;
};

std::vector<Reducer> make_reducers(std::span<const Polynomial> basis, const TermOrder& order) {
  std::vector<Reducer> out;
  out.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    auto lt = leading_term(g, order);
    out.push_back({std::move(lt.monomial), std::move(lt.coefficient), &g});
  }
  return out;
}

bool sorted_by_lead_desc(const Polynomial& a, const Polynomial& b, const TermOrder& order) {
  return order.compare(leading_term(a, order).monomial, leading_term(b, order).monomial) > 0;
}

}  // namespace

Term leading_term(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return {best->first, best->second};
}

Polynomial make_monic(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) return p;
  return (Rational(1) / leading_term(p, order).coefficient) * p;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  const auto lf = leading_term(f, order);
  const auto lg = leading_term(g, order);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  Polynomial s(f.num_vars());
  s.add_scaled(Rational(1) / lf.coefficient, l / lf.monomial, f);
  s.add_scaled(Rational(-1) / lg.coefficient, l / lg.monomial, g);
  return s;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& order) {
  const auto reducers = make_reducers(basis, order);
  OrderedTerms work(OrderGreater{&order});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);

  Polynomial remainder(f.num_vars());
  while (!work.empty()) {
    const auto top = work.begin();
    const Monomial m = top->first;
    const Rational c = top->second;
    const auto r = std::find_if(reducers.begin(), reducers.end(),
                                [&](const Reducer& red) { return red.lead.divides(m); });
    if (r == reducers.end()) {
      remainder.add_term(m, c);
      work.erase(top);
      continue;
    }
    const Monomial shift = m / r->lead;
    const Rational factor = -c / r->lead_coeff;
    for (const auto& [gm, gc] : r->poly->terms()) add_into(work, gm * shift, factor * gc);
  }
  return remainder;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(leading_term(g, order).monomial);
  return out;
}

GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order) {
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (homogeneous_degree(ideal.generators()[i]).kind != Homogeneity::homogeneous) {
      throw InputError("generator " + std::to_string(i) + " is not homogeneous");
    }
  }
  if (order.kind() == TermOrder::Kind::weighted && order.weight().num_vars() != ideal.num_vars()) {
    throw InputError("weight vector has " + std::to_string(order.weight().num_vars()) +
                     " entries, expected " + std::to_string(ideal.num_vars()));
  }

  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  // Pending pairs keyed by (lcm degree, j, i) for a deterministic selection.
  std::set<std::tuple<int, std::size_t, std::size_t>> pending;

  auto add_element = [&](Polynomial p) {
    p = make_monic(p, order);
    const std::size_t j = basis.size();
    leads.push_back(leading_term(p, order).monomial);
    basis.push_back(std::move(p));
    for (std::size_t i = 0; i < j; ++i) pending.emplace(lcm(leads[i], leads[j]).degree(), j, i);
  };

  auto is_pending = [&](std::size_t a, std::size_t b) {
    const auto [i, j] = std::minmax(a, b);
    return pending.count({lcm(leads[i], leads[j]).degree(), j, i}) > 0;
  };

  for (const auto& g : ideal.generators()) {
    const Polynomial r = normal_form(g, basis, order);
    if (!r.is_zero()) add_element(r);
  }

  while (!pending.empty()) {
    const auto [deg, j, i] = *pending.begin();
    pending.erase(pending.begin());
    const Monomial l = lcm(leads[i], leads[j]);
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (l.degree() == leads[i].degree() + leads[j].degree()) continue;
    // Chain criterion: some lead divides the lcm and both other pairs are done.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || !leads[k].divides(l)) continue;
      chain = !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;
    const Polynomial r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
    if (!r.is_zero()) add_element(r);
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !leads[k].divides(leads[i])) continue;
      // Equal leads: keep the earliest only.
      redundant = leads[k] != leads[i] || k < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    const Term lt = leading_term(minimal[i], order);
    Polynomial tail = minimal[i];
    tail.add_term(lt.monomial, -lt.coefficient);
    Polynomial reduced = normal_form(tail, others, order);
    reduced.add_term(lt.monomial, lt.coefficient);
    out.generators.push_back(make_monic(reduced, order));
  }
  std::sort(out.generators.begin(), out.generators.end(),
            [&](const Polynomial& a, const Polynomial& b) { return sorted_by_lead_desc(a, b, order); });
  return out;
}

bool satisfies_s_pair_criterion(std::span<const Polynomial> generators, const TermOrder& order) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!normal_form(s_polynomial(generators[i], generators[j], order), generators, order).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool is_reduced(std::span<const Polynomial> generators, const TermOrder& order) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].is_zero()) return false;
    if (leading_term(generators[i], order).coefficient != Rational(1)) return false;
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if (k == i) continue;
      const Monomial lead = leading_term(generators[k], order).monomial;
      for (const auto& [m, c] : generators[i].terms()) {
        if (lead.divides(m)) return false;
      }
    }
  }
  return true;
}

Polynomial initial_form(const Polynomial& p, const OneParameterSubgroup& lambda) {
  Polynomial out(p.num_vars());
  if (p.is_zero()) return out;
  std::int64_t best = lambda.pairing(p.terms().begin()->first);
  for (const auto& [m, c] : p.terms()) best = std::max(best, lambda.pairing(m));
  for (const auto& [m, c] : p.terms()) {
    if (lambda.pairing(m) == best) out.add_term(m, c);
  }
  return out;
}

FlatLimit flat_limit(const Ideal& ideal, const OneParameterSubgroup& lambda) {
  if (lambda.num_vars() != ideal.num_vars()) {
    throw InputError("weight vector has " + std::to_string(lambda.num_vars()) + " entries, expected " +
                     std::to_string(ideal.num_vars()));
  }
  GroebnerBasis basis = buchberger(ideal, TermOrder::weighted(lambda));
  std::vector<Polynomial> forms;
  forms.reserve(basis.generators.size());
  for (const auto& g : basis.generators) forms.push_back(initial_form(g, lambda));
  MonomialIdeal lead(ideal.num_vars(), basis.leading_monomials());
  Ideal initial(ideal.num_vars(), std::move(forms));
  return {std::move(basis), std::move(initial), std::move(lead)};
}

}  // namespace futaki
