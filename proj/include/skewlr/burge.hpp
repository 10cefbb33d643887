#pragma once

// Burge correspondence on biwords, flag compatibility, reverse fillings and
// compatible standard tableaux, key tableaux, essential subwords, left keys,
// and the decomposition of Tab(mu/gamma, Phi) into classes by recording tableau.

#include <climits>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewlr/combinatorics.hpp"
#include "skewlr/crystal.hpp"
#include "skewlr/tableau.hpp"

namespace skewlr {

using Rows = std::vector<std::vector<int>>;

/// Columns (i_k, j_k) in processing order k = 1..t; the display runs right to left.
struct Biword {
  std::vector<std::pair<int, int>> columns;

  /// Throws std::invalid_argument unless i is weakly increasing and i strictly
  /// increases wherever j does.
  void check() const;
  std::vector<int> top() const;
  std::vector<int> bottom() const;
  /// Two aligned rows, i_t ... i_1 over j_t ... j_1.
  std::string display() const;
  bool operator==(const Biword&) const = default;
};

/// Builds and validates the biword [top; bottom] given in processing order.
Biword make_biword(std::span<const int> top, std::span<const int> bottom);

using IntegerMatrix = std::vector<std::vector<int>>;  // r rows of n entries

/// Bottom matrix row first, left to right within each row, repeated m_ij times.
Biword biword_from_matrix(const IntegerMatrix& m);
IntegerMatrix matrix_from_biword(const Biword& w, std::size_t r, std::size_t n);
IntegerMatrix transpose(const IntegerMatrix& m);

struct BurgePair {
  Rows p, q;
  auto operator<=>(const BurgePair&) const = default;
};

/// Column-inserts j_1, j_2, ... into P, recording i_k at each new box of Q.
BurgePair burge(const Biword& w);

/// i_k <= Phi_{j_k} for every column.
bool is_j_phi_compatible(const Biword& w, const Flag& phi);
/// Same test for a bare pair of words.
bool is_compatible(std::span<const int> i, std::span<const int> a, std::span<const int> bounds);

/// 1..|shape| right to left within rows, top row first; rows cover the skew
/// boxes only. Not semistandard, hence plain rows.
Rows reverse_filling(const SkewShape& shape);
/// Throws std::invalid_argument when q does not have |shape| boxes or is not standard.
bool is_shape_compatible(const SkewTableau& q, const SkewShape& shape);
/// Standard tableaux of straight shape nu, lexicographic by rows.
std::vector<SkewTableau> standard_tableaux(const Partition& nu);
SkewTableau standardize(const SkewTableau& t);

/// The tableau of shape alpha-dagger and weight alpha.
SkewTableau key_tableau(const Composition& alpha);
/// Straight tableau whose column sets are nested.
bool is_key(const SkewTableau& t);

inline constexpr int kInfinity = INT_MAX;
Word essential_subword(std::span<const int> a, int L = kInfinity);
std::vector<std::size_t> ascents(std::span<const int> a);

/// Left key by column switching. t must be straight.
SkewTableau left_key(const SkewTableau& t);
/// Reference implementation from the full Knuth class; small tableaux only.
SkewTableau left_key_by_knuth_class(const SkewTableau& t);
/// All words Knuth-equivalent to w.
std::set<Word> knuth_class(const Word& w);
/// Columns read bottom to top, left to right.
Word column_word(const SkewTableau& t);

struct RecordingClass {
  SkewTableau q;            // std(R)
  SkewTableau r;            // recording tableau, weight mu - gamma
  Composition beta;         // weight of the left key of R
  std::vector<SkewTableau> members;
};

/// Groups Tab(mu/gamma, Phi) by the recording tableau of [b(rho); rev(b_T)].
/// Throws std::logic_error if P differs from rect(T) for some T.
std::vector<RecordingClass> class_decomposition(const Partition& mu, const Partition& gamma, const Flag& phi);

}  // namespace skewlr
