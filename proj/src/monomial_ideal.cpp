#include "futaki/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace futaki {

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) throw std::invalid_argument("monomial variable count mismatch");
  }
  // Ascending degree so every potential divisor is seen before its multiples.
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  for (const auto& g : generators) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
  std::reverse(gens_.begin(), gens_.end());
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  auto gens = gens_;
  gens.push_back(m);
  return MonomialIdeal(num_vars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g / gcd(g, m));
  return MonomialIdeal(num_vars_, std::move(gens));
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

int MonomialIdeal::krull_dimension() const {
  if (num_vars_ > 24) throw std::invalid_argument("too many variables for dimension search");
  if (is_unit()) return -1;
  std::vector<unsigned> supports;
  supports.reserve(gens_.size());
  for (const auto& g : gens_) {
    unsigned s = 0;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (g[i] > 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  const unsigned full = 1u << num_vars_;
  for (unsigned subset = 0; subset < full; ++subset) {
    const int size = __builtin_popcount(subset);
    if (size <= best) continue;
    const bool free = std::none_of(supports.begin(), supports.end(),
                                   [&](unsigned s) { return (s & ~subset) == 0; });
    if (free) best = size;
  }
  return best;
}

std::string MonomialIdeal::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str();
  }
  return out + ")";
}

}  // namespace futaki
