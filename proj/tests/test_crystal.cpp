#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlr/crystal.hpp"

using namespace skewlr;

namespace {

Word W(const char* s) { return parse_word(s); }

std::vector<Word> all_words(std::size_t len, std::size_t n) {
  std::vector<Word> out;
  Word w(len, 1);
  while (true) {
    out.push_back(w);
    std::size_t k = len;
    while (k > 0 && w[k - 1] == static_cast<int>(n)) w[--k] = 1;
    if (k == 0) break;
    ++w[k - 1];
  }
  return out;
}

bool prefix_dominant(const Word& w, std::size_t n) {
  std::vector<int> cnt(n + 2, 0);
  for (int x : w) {
    ++cnt[static_cast<std::size_t>(x)];
    if (x > 1 && cnt[static_cast<std::size_t>(x)] > cnt[static_cast<std::size_t>(x - 1)]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("operator examples, both implementations") {
  TensorRecursion tr(2);
  CHECK(lower(W("11"), 1, 2) == W("21"));
  CHECK(tr.apply(W("11"), 1, Direction::lower) == W("21"));
  CHECK_FALSE(lower(W("12"), 1, 2));
  CHECK_FALSE(raise(W("12"), 1, 2));
  CHECK_FALSE(tr.apply(W("12"), 1, Direction::lower));
  CHECK_FALSE(tr.apply(W("12"), 1, Direction::raise));
  CHECK(raise(W("212"), 1, 2) == W("112"));
  CHECK(tr.apply(W("212"), 1, Direction::raise) == W("112"));
  CHECK_THROWS_AS(raise(W("12"), 2, 2), std::out_of_range);
  CHECK_THROWS_AS(raise(W("12"), 0, 2), std::out_of_range);
}

TEST_CASE("epsilon_phi examples") {
  TensorRecursion tr(3);
  CHECK(epsilon_phi(W("11"), 1, 2) == std::pair{0, 2});
  CHECK(tr.epsilon_phi(W("11"), 1) == std::pair{0, 2});
  CHECK(epsilon_phi(W("12"), 1, 2) == std::pair{0, 0});
  CHECK(tr.epsilon_phi(W("12"), 1) == std::pair{0, 0});
  for (int k = 1; k <= 2; ++k) CHECK(tr.epsilon_phi(Word{k}, k) == std::pair{0, 1});
}

TEST_CASE("dominance") {
  CHECK(is_dominant(W("11123"), 3));
  CHECK_FALSE(is_dominant(W("21"), 2));
  CHECK(is_dominant(W("12"), 2));

  SkewTableau box2(SkewShape::straight(Partition({1, 0})), {{2}, {}});
  CHECK(is_lambda_dominant(box2, Partition({1, 0})));
  CHECK_FALSE(is_lambda_dominant(box2, Partition({0, 0})));

  SkewTableau anchor(SkewShape(Partition({5, 4, 2, 1}), Partition({2, 1, 0, 0})), {{1, 1, 2}, {1, 2, 2}, {1, 3}, {4}});
  CHECK(is_lambda_dominant(anchor, Partition({3, 1, 1, 0})));
  auto wt = anchor.weight();
  std::vector<int> total{3 + wt[0], 1 + wt[1], 1 + wt[2], 0 + wt[3]};
  CHECK(total == std::vector<int>{7, 4, 2, 1});
}

TEST_CASE("flagged_word_set") {
  CHECK(flagged_word_set(std::vector<int>{1, 2}, Composition({1, 1})) == WordSet{W("11"), W("12")});
  CHECK(flagged_word_set(std::vector<int>{2, 2}, Composition({1, 1})) == WordSet{W("11"), W("12"), W("21"), W("22")});
  CHECK(flagged_word_set(std::vector<int>{2, 2}, Composition({0, 2})) == WordSet{W("11"), W("12"), W("21"), W("22")});
  CHECK(flagged_word_set(std::vector<int>{1, 2}, Composition({0, 0})) == WordSet{Word{}});
}

TEST_CASE("generate_demazure") {
  CHECK(generate_demazure(W("1"), std::vector<int>{}, 2) == WordSet{W("1")});
  CHECK(generate_demazure(W("1"), std::vector<int>{1}, 2) == WordSet{W("1"), W("2")});
  CHECK(generate_demazure(W("121"), std::vector<int>{1}, 2) == WordSet{W("121"), W("122")});
  CHECK_THROWS_AS(generate_demazure(W("21"), std::vector<int>{1}, 2), std::invalid_argument);
  // Both reduced words of w0 in S_3.
  for (const auto& lam : partitions_up_to(4, 3)) {
    Word b = dominant_tableau(lam).reading_word();
    CHECK(generate_demazure(b, std::vector<int>{1, 2, 1}, 3) == generate_demazure(b, std::vector<int>{2, 1, 2}, 3));
    WordSet full = reading_words(enumerate_tableaux(SkewShape::straight(lam), std::vector<int>{3, 3, 3}));
    CHECK(generate_demazure(b, std::vector<int>{1, 2, 1}, 3) == full);
  }
}

TEST_CASE("string property") {
  std::vector<int> bad{3, 2, 3};
  auto ts = enumerate_tableaux(Partition({3, 2, 0}), Partition({1, 0, 0}), bad);
  auto v = string_property_violation(reading_words(ts), 3);
  REQUIRE(v);
  CHECK_FALSE(v->describe().empty());
  CHECK(has_string_property(flagged_word_set(std::vector<int>{2, 3, 3}, Composition({1, 1, 1})), 3));
  CHECK(has_string_property(WordSet{W("12")}, 2));
  CHECK_THROWS_AS(decompose(reading_words(ts), 3), StringPropertyError);
}

TEST_CASE("decompose examples") {
  auto ts = enumerate_tableaux(Partition({2, 2}), Partition({1, 0}), std::vector<int>{2, 2});
  auto s = reading_words(ts);
  CHECK(s == WordSet{W("121"), W("122")});
  auto comps = decompose(s, 2);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].head == W("121"));
  CHECK(comps[0].highest_weight == Partition({2, 1}));
  CHECK(comps[0].key_weight == Composition({1, 2}));

  auto single = decompose(WordSet{W("12")}, 2);
  REQUIRE(single.size() == 1);
  CHECK(single[0].highest_weight == Partition({1, 1}));
  CHECK(single[0].key_weight == Composition({1, 1}));

  auto c = decompose(prepend_dominant(Partition({1, 0}), s), 2);
  REQUIRE(c.size() == 2);
  for (const auto& comp : c) CHECK(is_dominant(comp.head, 2));
  CHECK(c[0].head == W("1121"));
  CHECK(c[1].head == W("1122"));
}

TEST_CASE("coefficient_by_tableaux examples") {
  Partition l10({1, 0}), z({0, 0});
  CHECK(coefficient_by_tableaux(l10, l10, z, Partition({1, 1}), Flag({2, 2})) == 1);
  CHECK(coefficient_by_tableaux(l10, l10, z, Partition({1, 1}), Flag({1, 2})) == 0);
  CHECK(coefficient_by_tableaux(Partition({3, 1, 1, 0}), Partition({5, 4, 2, 1}), Partition({2, 1, 0, 0}),
                                Partition({7, 4, 2, 1}), Flag({2, 2, 3, 4})) >= 1);
  CHECK(coefficient_by_tableaux(z, l10, Partition({2, 0}), l10, Flag({2, 2})) == 0);
  CHECK_THROWS_AS(coefficient_by_tableaux(z, l10, z, Partition({1, 0, 0}), Flag({2, 2})), std::invalid_argument);
}

TEST_CASE("crystal axioms on words of length <= 6, n <= 3") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t len = 0; len <= 6; ++len)
      for (const auto& x : all_words(len, n))
        for (int i = 1; i < static_cast<int>(n); ++i) {
          auto wt = word_weight(x, n);
          auto [eps, phi] = epsilon_phi(x, i, n);
          CHECK(phi - eps == wt[static_cast<std::size_t>(i - 1)] - wt[static_cast<std::size_t>(i)]);
          if (auto y = lower(x, i, n)) {
            CHECK(raise(*y, i, n) == x);
            auto wy = word_weight(*y, n);
            CHECK(wy[static_cast<std::size_t>(i - 1)] == wt[static_cast<std::size_t>(i - 1)] - 1);
            CHECK(wy[static_cast<std::size_t>(i)] == wt[static_cast<std::size_t>(i)] + 1);
          }
          if (auto y = raise(x, i, n)) CHECK(lower(*y, i, n) == x);
        }
}

TEST_CASE("bracket rule agrees with the tensor recursion; dominance is the prefix condition") {
  for (std::size_t n = 2; n <= 4; ++n) {
    TensorRecursion tr(n);
    const std::size_t max_len = n == 4 ? 6 : 8;  // full length-8 census runs in the acceptance binary
    for (std::size_t len = 0; len <= max_len; ++len)
      for (const auto& x : all_words(len, n)) {
        for (int i = 1; i < static_cast<int>(n); ++i) {
          CHECK(tr.apply(x, i, Direction::raise) == raise(x, i, n));
          CHECK(tr.apply(x, i, Direction::lower) == lower(x, i, n));
          CHECK(tr.epsilon_phi(x, i) == epsilon_phi(x, i, n));
        }
        CHECK(is_dominant(x, n) == prefix_dominant(x, n));
      }
  }
}

TEST_CASE("character multiplicativity") {
  WordSet a = flagged_word_set(std::vector<int>{1, 3, 3}, Composition({1, 1, 0}));
  WordSet b = flagged_word_set(std::vector<int>{2, 2, 3}, Composition({0, 1, 1}));
  WordSet ab;
  for (const auto& x : a)
    for (const auto& y : b) {
      Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      ab.insert(w);
    }
  CHECK(character(ab, 3) == character(a, 3) * character(b, 3));
}

TEST_CASE("Demazure character formula, n = 3") {
  for (const auto& lam : partitions_up_to(4, 3))
    for (const auto& w : all_permutations(3)) {
      Word b = dominant_tableau(lam).reading_word();
      auto s = generate_demazure(b, reduced_word(w), 3);
      CHECK(character(s, 3) == key_polynomial(Composition(w.act(lam.parts()))));
    }
}

TEST_CASE("decomposition of flagged skew tableaux") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& mu : partitions_up_to(5, n))
      for (const auto& gamma : partitions_inside(mu))
        for (const auto& phi : all_flags(n)) {
          auto s = reading_words(enumerate_tableaux(mu, gamma, phi.bounds()));
          REQUIRE(has_string_property(s, n));
          auto comps = decompose(s, n);
          IntPolynomial sum(n);
          for (const auto& c : comps) sum += key_polynomial(c.key_weight);
          CHECK(sum == flagged_skew_schur(mu, gamma, phi.bounds()));

          // Prepending a dominant word: heads are the lambda-dominant elements.
          for (const auto& lam : partitions_up_to(2, n)) {
            auto cs = decompose(prepend_dominant(lam, s), n);
            std::map<Partition, long long> hw;
            for (const auto& c : cs) ++hw[c.highest_weight];
            CHECK(hw == coefficient_table_by_tableaux(lam, mu, gamma, phi));
          }
        }
}

TEST_CASE("DOT export") {
  auto dot = crystal_dot(WordSet{W("1"), W("2")}, 2);
  CHECK(dot.find("\"1\" -> \"2\"") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
}
