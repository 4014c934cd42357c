#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "futaki/rational.hpp"

namespace futaki {

/// Coefficients c0, c1, ... of the unique polynomial of degree < ys.size()
/// through (first_x + i, ys[i]).
std::vector<Rational> interpolate_consecutive(long first_x, std::span<const Rational> ys);

Rational evaluate(std::span<const Rational> coeffs, const Rational& x);

/// Drops trailing zero coefficients.
std::vector<Rational> trimmed(std::vector<Rational> coeffs);

/// Order-k forward differences of ys (length ys.size() - k).
std::vector<Rational> forward_differences(std::span<const Rational> ys, int order);

/// Polynomial agreeing with a sampled sequence from `onset` onward.
struct TailFit {
  std::vector<Rational> coeffs;  // length degree + 1; higher entries may be zero
  long onset = 0;
};

/// Fits a polynomial of degree <= `degree` to the tail of `samples`
/// (consecutive integer keys). Accepts when the order-(degree+1) differences
/// vanish for at least `confirmations` consecutive trailing positions, and
/// then requires `spot_check(x)` to match at x = last key + 2 when given.
/// A degree of -1 fits the zero polynomial. Throws StabilizationError.
TailFit fit_stable_tail(const std::map<long, Rational>& samples, int degree, int confirmations,
                        const std::function<Rational(long)>& spot_check = {});

}  // namespace futaki
