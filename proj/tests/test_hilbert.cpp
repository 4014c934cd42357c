#include <doctest.h>

#include <numeric>
#include <random>

#include "corpus_ideals.hpp"
#include "futaki/errors.hpp"
#include "futaki/groebner.hpp"
#include "futaki/hilbert.hpp"
#include "futaki/interpolation.hpp"
#include "oracles.hpp"

using namespace futaki;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::vector<oracle::Exps> exps_of(const MonomialIdeal& m) {
  std::vector<oracle::Exps> out;
  for (const auto& g : m.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

std::vector<Rational> rats(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

MonomialIdeal random_monomial_ideal(std::mt19937& rng, std::size_t nv) {
  std::uniform_int_distribution<int> count(0, 4), e(0, 2);
  std::vector<Monomial> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> x(nv);
    for (auto& v : x) v = e(rng);
    if (std::accumulate(x.begin(), x.end(), 0) == 0) x[0] = 1;
    gens.emplace_back(x);
  }
  return MonomialIdeal(nv, gens);
}

}  // namespace

TEST_CASE("standard_monomials examples") {
  const MonomialIdeal conic_lead(3, {mono({1, 0, 1})});
  const auto s1 = standard_monomials(conic_lead, 1);
  CHECK(s1 == std::vector<Monomial>{mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});

  const auto s2 = standard_monomials(conic_lead, 2);
  CHECK(oracle::count_standard(3, exps_of(conic_lead), 2) == 5);
  CHECK(s2 == std::vector<Monomial>{mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}), mono({0, 1, 1}),
                                    mono({0, 0, 2})});

  const MonomialIdeal unit(3, {Monomial(3)});
  for (int m = 0; m <= 5; ++m) CHECK(standard_monomials(unit, m).empty());
}

TEST_CASE("hilbert_function examples") {
  const MonomialIdeal x1sq(3, {mono({0, 2, 0})});
  CHECK(oracle::count_standard(3, exps_of(x1sq), 3) == 7);
  CHECK(hilbert_function(x1sq, 3) == 7);
  CHECK(hilbert_function(x1sq, 3, HilbertPath::enumeration) == 7);

  CHECK(hilbert_function(MonomialIdeal(3), 4) == 15);
  CHECK(hilbert_function(MonomialIdeal(3), 4, HilbertPath::enumeration) == 15);

  const MonomialIdeal tc_lead(4, {mono({0, 2, 0, 0}), mono({0, 1, 1, 0}), mono({0, 0, 2, 0})});
  CHECK(oracle::count_standard(4, exps_of(tc_lead), 2) == 7);
  CHECK(hilbert_function(tc_lead, 2) == 7);
  for (int m = 0; m <= 10; ++m) CHECK(hilbert_function(tc_lead, m) == 3 * m + 1);
}

TEST_CASE("enumeration and series paths agree") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t nv = 1 + trial % 5;
    const auto ideal = random_monomial_ideal(rng, nv);
    for (int m = 0; m <= 12; ++m) {
      CAPTURE(ideal.str());
      CAPTURE(m);
      const auto e = hilbert_function(ideal, m, HilbertPath::enumeration);
      CHECK(e == hilbert_function(ideal, m, HilbertPath::series));
      CHECK(e == oracle::count_standard(static_cast<int>(nv), exps_of(ideal), m));
    }
  }
  for (const auto& entry : testdata::corpus()) {
    for (const auto& w : entry.lambdas) {
      const auto lead = flat_limit(entry.ideal(), OneParameterSubgroup(w)).lead;
      for (int m = 0; m <= 12; ++m) {
        CHECK(hilbert_function(lead, m, HilbertPath::enumeration) == hilbert_function(lead, m));
      }
    }
  }
}

TEST_CASE("monotone containment") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t nv = 2 + trial % 3;
    const auto small = random_monomial_ideal(rng, nv);
    auto gens = small.generators();
    const auto extra = random_monomial_ideal(rng, nv);
    gens.insert(gens.end(), extra.generators().begin(), extra.generators().end());
    const MonomialIdeal big(nv, gens);
    for (int m = 0; m <= 8; ++m) CHECK(hilbert_function(small, m) >= hilbert_function(big, m));
  }
}

TEST_CASE("hilbert_polynomial examples") {
  const MonomialIdeal conic_lead(3, {mono({1, 0, 1})});
  const auto conic = hilbert_polynomial(conic_lead, 12);
  CHECK(conic.poly_coeffs == rats({1, 2}));
  CHECK(conic.onset_m0 == 0);
  for (int m = 0; m <= 6; ++m) CHECK(conic.values.at(m) == 2 * m + 1);

  const MonomialIdeal irrelevant(3, {mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})});
  const auto empty = hilbert_polynomial(irrelevant, 8);
  CHECK(empty.poly_coeffs.empty());
  CHECK(empty.onset_m0 == 1);
  CHECK(empty.dim_n == -1);

  const auto qs_lead = flat_limit(testdata::corpus()[2].ideal(), OneParameterSubgroup({0, 0, 0, 0})).lead;
  CHECK(qs_lead == MonomialIdeal(4, {mono({0, 1, 1, 0})}));
  std::vector<long> xs;
  std::vector<Rational> ys;
  for (int m = 5; m <= 7; ++m) {
    xs.push_back(m);
    ys.emplace_back(oracle::count_standard(4, exps_of(qs_lead), m));
  }
  CHECK(oracle::fit(xs, ys) == rats({1, 2, 1}));
  const auto qs = hilbert_polynomial(qs_lead, default_m_max(qs_lead));
  CHECK(qs.poly_coeffs == rats({1, 2, 1}));
  CHECK(qs.onset_m0 == 0);
}

TEST_CASE("hilbert_polynomial with a late onset") {
  // x0^2 * (x0, x1): the embedded point makes HF(m) = 2m + 2 only from m = 2 on.
  const MonomialIdeal late(3, {mono({3, 0, 0}), mono({2, 1, 0})});
  const auto hp = hilbert_polynomial(late, default_m_max(late));
  std::vector<long> xs{20, 21};
  std::vector<Rational> ys{Rational(oracle::count_standard(3, exps_of(late), 20)),
                           Rational(oracle::count_standard(3, exps_of(late), 21))};
  CHECK(hp.poly_coeffs == oracle::fit(xs, ys));
  for (const auto& [m, v] : hp.values) {
    if (m >= hp.onset_m0) CHECK(Rational(v) == evaluate(hp.poly_coeffs, Rational(m)));
  }
  CHECK(hp.onset_m0 == 2);
  REQUIRE(hp.onset_m0 >= 1);
  CHECK(Rational(hp.values.at(hp.onset_m0 - 1)) != evaluate(hp.poly_coeffs, Rational(hp.onset_m0 - 1)));
}

TEST_CASE("eventual polynomiality: order n+2 differences vanish past onset") {
  for (const auto& entry : testdata::corpus()) {
    for (const auto& w : entry.lambdas) {
      const auto lead = flat_limit(entry.ideal(), OneParameterSubgroup(w)).lead;
      const auto hp = hilbert_polynomial(lead, default_m_max(lead));
      std::vector<Rational> tail;
      for (const auto& [m, v] : hp.values) {
        if (m >= hp.onset_m0) tail.emplace_back(v);
      }
      for (const auto& d : forward_differences(tail, hp.dim_n + 2)) CHECK(d.is_zero());
    }
  }
}

TEST_CASE("hilbert_polynomial reports missing stabilization") {
  const MonomialIdeal late(3, {mono({6, 0, 0}), mono({5, 1, 0})});
  CHECK_THROWS_AS(hilbert_polynomial(late, 4), StabilizationError);
}

TEST_CASE("geometric_invariants examples") {
  HilbertProfile p;
  p.poly_coeffs = rats({1, 2});
  auto inv = geometric_invariants(p);
  CHECK(inv.n == 1);
  CHECK(inv.d == 2);
  CHECK(inv.mu == Rational(1));

  p.poly_coeffs = rats({1, 3});
  inv = geometric_invariants(p);
  CHECK(inv.d == 3);
  CHECK(inv.mu == Rational(BigInt(2), BigInt(3)));

  p.poly_coeffs = rats({1, 2, 1});
  inv = geometric_invariants(p);
  CHECK(inv.n == 2);
  CHECK(inv.d == 2);
  CHECK(inv.mu == Rational(4));

  p.poly_coeffs = {Rational(1), Rational(BigInt(1), BigInt(3))};
  CHECK_THROWS_AS(geometric_invariants(p), InputError);
  p.poly_coeffs = {};
  CHECK_THROWS_AS(geometric_invariants(p), InputError);
}

TEST_CASE("interpolation helpers") {
  // 3m^2 - m + 4 sampled at 5..8
  std::vector<Rational> ys;
  for (long m = 5; m <= 8; ++m) ys.emplace_back(3 * m * m - m + 4);
  CHECK(trimmed(interpolate_consecutive(5, ys)) == rats({4, -1, 3}));
  CHECK(evaluate(rats({4, -1, 3}), Rational(10)) == Rational(294));
  CHECK(forward_differences(ys, 3) == rats({0}));
}
