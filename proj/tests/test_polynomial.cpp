#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewlr/polynomial.hpp"

using namespace skewlr;

namespace {

IntPolynomial mono(std::initializer_list<int> e, long long c = 1) { return IntPolynomial::monomial(Exponent(e), c); }

// Exact long division of g by (x_i - x_{i+1}); fails the test if it leaves a remainder.
IntPolynomial divide_by_difference(IntPolynomial g, int i) {
  const auto p = static_cast<std::size_t>(i - 1), q = p + 1;
  IntPolynomial quot(g.nvars());
  while (!g.is_zero()) {
    // Term with the largest x_i exponent (ties: any).
    auto it = std::max_element(g.terms().begin(), g.terms().end(),
                               [&](const auto& a, const auto& b) { return a.first[p] < b.first[p]; });
    Exponent e = it->first;
    long long c = it->second;
    REQUIRE(e[p] > 0);
    e[p] -= 1;
    quot.add_term(e, c);
    Exponent ep = e, eq = e;
    ep[p] += 1;
    eq[q] += 1;
    g.add_term(ep, -c);
    g.add_term(eq, c);
  }
  return quot;
}

IntPolynomial literal_Ti(const IntPolynomial& f, int i) {
  auto xi = IntPolynomial::variable(f.nvars(), i), xj = IntPolynomial::variable(f.nvars(), i + 1);
  return divide_by_difference(xi * f - xj * f.swap_vars(i), i);
}

IntPolynomial random_poly(std::mt19937& rng, std::size_t n, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-3, 3), terms(1, 5);
  IntPolynomial f(n);
  int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    int d = deg(rng);
    Exponent e(n, 0);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    for (int s = 0; s < d; ++s) ++e[var(rng)];
    f.add_term(e, coef(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("arithmetic and rendering") {
  auto f = mono({1, 0}) + mono({0, 1});
  CHECK((f * f).to_string() == "1 * x1^2 + 2 * x1 x2 + 1 * x2^2");
  CHECK((f - f).is_zero());
  CHECK(IntPolynomial(2).to_string() == "0");
  CHECK(mono({0, 0}, -2).to_string() == "-2 * 1");
  CHECK(f.is_symmetric());
  CHECK_FALSE(mono({1, 0}).is_symmetric());
}

TEST_CASE("T_i closed form examples") {
  CHECK(demazure_Ti(mono({1, 0}), 1) == mono({1, 0}) + mono({0, 1}));
  CHECK(demazure_Ti(mono({0, 1}), 1).is_zero());
  CHECK(demazure_Ti(mono({2, 0}), 1) == mono({2, 0}) + mono({1, 1}) + mono({0, 2}));
  CHECK(demazure_Ti(mono({0, 2}), 1) == mono({1, 1}) * -1);
  CHECK_THROWS_AS(demazure_Ti(mono({1, 0}), 2), std::out_of_range);
  CHECK_THROWS_AS(demazure_Ti(mono({1, 0}), 0), std::out_of_range);
}

TEST_CASE("T_w examples") {
  auto f = mono({1, 2});
  CHECK(demazure_Tw(f, Permutation::identity(2)) == f);
  CHECK(demazure_Tw(mono({1, 0}), Permutation::longest(2)) == schur(Partition({1, 0})));
  auto g = mono({2, 1, 0});
  std::vector<int> w121{1, 2, 1}, w212{2, 1, 2};
  CHECK(demazure_word(g, w121) == demazure_word(g, w212));
}

TEST_CASE("key polynomial examples") {
  CHECK(key_polynomial(Composition({2, 0})) == mono({2, 0}));
  CHECK(key_polynomial(Composition({0, 2})) == mono({2, 0}) + mono({1, 1}) + mono({0, 2}));
  CHECK(key_polynomial(Composition({1, 2})) == mono({2, 1}) + mono({1, 2}));
}

TEST_CASE("schur and flagged skew schur examples") {
  CHECK(schur(Partition({1, 0})) == mono({1, 0}) + mono({0, 1}));
  CHECK(schur(Partition({1, 1})) == mono({1, 1}));
  CHECK(schur(Partition({2, 1})) == mono({2, 1}) + mono({1, 2}));
  std::vector<int> b22{2, 2}, b12{1, 2};
  CHECK(flagged_skew_schur(Partition({2, 2}), Partition({1, 0}), b22) == mono({2, 1}) + mono({1, 2}));
  CHECK(flagged_skew_schur(Partition({1, 0}), Partition({0, 0}), b12) == mono({1, 0}));
  CHECK(flagged_skew_schur(Partition({2, 1}), Partition({1, 0}), b22) ==
        mono({2, 0}) + mono({1, 1}, 2) + mono({0, 2}));
  CHECK(flagged_skew_schur(Partition({1, 0}), Partition({2, 0}), b22).is_zero());
}

TEST_CASE("expand_in_schur examples") {
  CHECK(expand_in_schur(IntPolynomial(2)).empty());
  CHECK(expand_in_schur(mono({2, 1}) + mono({1, 2})) == std::map<Partition, long long>{{Partition({2, 1}), 1}});
  std::vector<int> b22{2, 2};
  auto s = flagged_skew_schur(Partition({2, 1}), Partition({1, 0}), b22);
  CHECK(expand_in_schur(s) ==
        std::map<Partition, long long>{{Partition({2, 0}), 1}, {Partition({1, 1}), 1}});
  CHECK_THROWS_AS(expand_in_schur(mono({1, 0})), std::domain_error);
}

TEST_CASE("expand_in_key examples") {
  CHECK(expand_in_key(mono({2, 0})) == std::map<Composition, long long>{{Composition({2, 0}), 1}});
  std::vector<int> b22{2, 2};
  auto s = flagged_skew_schur(Partition({2, 2}), Partition({1, 0}), b22);
  CHECK(expand_in_key(s) == std::map<Composition, long long>{{Composition({1, 2}), 1}});
  // T_1 x2^2 = -x1 x2 is not key positive.
  auto neg = expand_in_key(mono({1, 1}) * -1);
  CHECK(neg == std::map<Composition, long long>{{Composition({1, 1}), -1}});
}

TEST_CASE("flagged skew schur polynomials are key positive") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& mu : partitions_up_to(5, n))
      for (const auto& gamma : partitions_inside(mu))
        for (const auto& phi : all_flags(n))
          for (const auto& [alpha, m] : expand_in_key(flagged_skew_schur(mu, gamma, phi.bounds())))
            CHECK(m > 0);
}

TEST_CASE("coefficient_by_demazure examples") {
  Flag f22({2, 2}), f12({1, 2});
  Partition l10({1, 0}), z({0, 0});
  CHECK(coefficient_by_demazure(l10, l10, z, Partition({2, 0}), f22) == 1);
  CHECK(coefficient_by_demazure(l10, l10, z, Partition({1, 1}), f22) == 1);
  CHECK(coefficient_by_demazure(l10, l10, z, Partition({1, 1}), f12) == 0);
  CHECK(coefficient_by_demazure(z, Partition({2, 2}), l10, Partition({2, 1}), f22) == 1);
  CHECK(coefficient_table_by_demazure(l10, l10, z, f12) == std::map<Partition, long long>{{Partition({2, 0}), 1}});
}

TEST_CASE("closed form matches literal division; idempotence and braids") {
  std::mt19937 rng(11);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      auto f = random_poly(rng, n, 6);
      for (int i = 1; i < static_cast<int>(n); ++i) {
        auto t = demazure_Ti(f, i);
        CHECK(t == literal_Ti(f, i));
        CHECK(demazure_Ti(t, i) == t);
        if (i + 1 < static_cast<int>(n)) {
          std::vector<int> a{i, i + 1, i}, b{i + 1, i, i + 1};
          CHECK(demazure_word(f, a) == demazure_word(f, b));
        }
        for (int j = i + 2; j < static_cast<int>(n); ++j)
          CHECK(demazure_Ti(demazure_Ti(f, j), i) == demazure_Ti(demazure_Ti(f, i), j));
      }
    }
}

TEST_CASE("key polynomials symmetrize to Schur; key expansion is triangular") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int total = 0; total <= 6; ++total)
      for (const auto& alpha : compositions_of(total, n)) {
        auto k = key_polynomial(alpha);
        CHECK(demazure_Tw(k, Permutation::longest(n)) == schur(sort_to_partition(alpha).first));
        CHECK(expand_in_key(k) == std::map<Composition, long long>{{alpha, 1}});
      }
}

TEST_CASE("key positivity is preserved by x^lambda and T_w") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (int total = 0; total <= 3; ++total)
      for (const auto& alpha : compositions_of(total, n))
        for (const auto& lam : partitions_up_to(2, n)) {
          auto f = IntPolynomial::monomial(lam.parts()) * key_polynomial(alpha);
          for (const auto& [beta, m] : expand_in_key(f)) CHECK(m > 0);
          for (const auto& w : all_permutations(n))
            for (const auto& [beta, m] : expand_in_key(demazure_Tw(f, w))) CHECK(m > 0);
        }
}
