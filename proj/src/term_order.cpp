#include "futaki/term_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace futaki {

bool OneParameterSubgroup::is_trivial() const {
  return std::all_of(weights_.begin(), weights_.end(), [](std::int64_t w) { return w == 0; });
}

OneParameterSubgroup OneParameterSubgroup::translated(std::int64_t shift) const {
  auto w = weights_;
  for (auto& x : w) x += shift;
  return OneParameterSubgroup(std::move(w));
}

OneParameterSubgroup OneParameterSubgroup::scaled(std::int64_t factor) const {
  auto w = weights_;
  for (auto& x : w) x *= factor;
  return OneParameterSubgroup(std::move(w));
}

std::string OneParameterSubgroup::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(weights_[i]);
  }
  return out + ")";
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomial variable count mismatch");
  if (kind_ == Kind::weighted) {
    if (weight_.num_vars() != a.num_vars()) throw std::invalid_argument("weight vector length mismatch");
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    const auto wa = weight_.pairing(a);
    const auto wb = weight_.pairing(b);
    if (wa != wb) return wa <=> wb;
  }
  return grevlex_compare(a, b);
}

std::strong_ordering mono_compare(const TermOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

}  // namespace futaki
