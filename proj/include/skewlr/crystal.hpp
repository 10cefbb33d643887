#pragma once

// Type A_{n-1} crystal on words: raising/lowering operators (tensor-product
// recursion and the bracket-matching rule), dominance, Demazure crystals,
// the string property and decomposition into Demazure components.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "skewlr/combinatorics.hpp"
#include "skewlr/polynomial.hpp"
#include "skewlr/tableau.hpp"

namespace skewlr {

enum class Direction { raise, lower };

using WordSet = std::set<Word>;

/// Bracket-matching rule: each i is paired with a later unpaired i+1;
/// f_i changes the leftmost unpaired i, e_i the rightmost unpaired i+1.
std::optional<Word> apply_operator(const Word& w, int i, Direction d, std::size_t n);
std::optional<Word> raise(const Word& w, int i, std::size_t n);
std::optional<Word> lower(const Word& w, int i, std::size_t n);
/// (epsilon_i, phi_i).
std::pair<int, int> epsilon_phi(const Word& w, int i, std::size_t n);

/// Literal left-associated tensor recursion (w_1 ... w_{k-1}) (x) w_k over the
/// standard crystal, with epsilon/phi counted by repeated application.
/// Results are memoized per instance; not thread-safe.
class TensorRecursion {
 public:
  explicit TensorRecursion(std::size_t n) : n_(n) {}
  std::optional<Word> apply(const Word& w, int i, Direction d);
  std::pair<int, int> epsilon_phi(const Word& w, int i);
  std::size_t cache_size() const { return ops_.size(); }

 private:
  int count(const Word& w, int i, Direction d);

  std::size_t n_;
  std::map<std::tuple<Word, int, int>, std::optional<Word>> ops_;
  std::map<std::tuple<Word, int, int>, int> counts_;
};

Composition word_weight(const Word& w, std::size_t n);
IntPolynomial character(const WordSet& s, std::size_t n);

/// Killed by every e_i.
bool is_dominant(const Word& w, std::size_t n);
/// b_{T^0_lambda} * b_T is dominant.
bool is_lambda_dominant(const SkewTableau& t, const Partition& lambda);

/// Words whose first rho_1 letters are <= bounds_1, next rho_2 letters <= bounds_2, ...
WordSet flagged_word_set(std::span<const int> bounds, const Composition& rho);

/// f_{i_1}^{k_1} ... f_{i_p}^{k_p} b over all k; the last index is saturated first.
/// Throws std::invalid_argument if b is not dominant.
WordSet generate_demazure(const Word& b, std::span<const int> reduced, std::size_t n);

struct StringWitness {
  Word x;
  int i = 0;
  Direction failing = Direction::raise;  // which image left the set
  Word image;
  std::string describe() const;
};

/// First violation in (word, i) order, or nullopt if the set has the string property.
std::optional<StringWitness> string_property_violation(const WordSet& s, std::size_t n);
inline bool has_string_property(const WordSet& s, std::size_t n) { return !string_property_violation(s, n); }

class StringPropertyError : public std::runtime_error {
 public:
  explicit StringPropertyError(StringWitness w)
      : std::runtime_error("string property fails: " + w.describe()), witness(std::move(w)) {}
  StringWitness witness;
};

struct DemazureComponent {
  Word head;
  WordSet members;
  Partition highest_weight;
  Composition key_weight;
};

/// Groups s by the head reached through raising operators. Components are
/// ordered by head. Throws StringPropertyError, or std::logic_error when a
/// component character is not a single key polynomial.
std::vector<DemazureComponent> decompose(const WordSet& s, std::size_t n);

/// Reading words of a list of tableaux.
WordSet reading_words(const std::vector<SkewTableau>& ts);
/// {b_{T^0_lambda} * w : w in s}.
WordSet prepend_dominant(const Partition& lambda, const WordSet& s);

/// Number of lambda-dominant tableaux in Tab(mu/gamma, Phi) of weight nu - lambda.
long long coefficient_by_tableaux(const Partition& lambda, const Partition& mu, const Partition& gamma,
                                  const Partition& nu, const Flag& phi);
/// nu -> coefficient for all nu at once.
std::map<Partition, long long> coefficient_table_by_tableaux(const Partition& lambda, const Partition& mu,
                                                             const Partition& gamma, const Flag& phi);

/// Graphviz digraph of the f_i edges inside s, coloured by i.
std::string crystal_dot(const WordSet& s, std::size_t n, const std::string& name = "crystal");

}  // namespace skewlr
