#pragma once

// Skew shapes, semistandard skew tableaux with row bounds, reverse-row
// reading words, row/column insertion and jeu-de-taquin rectification.

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewlr/combinatorics.hpp"

namespace skewlr {

/// Letters are 1-based.
using Word = std::vector<int>;

std::string word_string(std::span<const int> w);  // "2132314" (comma-separated if any letter > 9)
Word parse_word(std::string_view text);            // accepts "2132314" or "2,1,3"

class SkewShape {
 public:
  SkewShape() = default;
  /// Throws unless inner is contained in outer with the same ambient length.
  SkewShape(Partition outer, Partition inner);
  static SkewShape straight(const Partition& outer) {
    return SkewShape(outer, Partition::zero(outer.size()));
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  std::size_t ambient() const { return outer_.size(); }
  int row_length(std::size_t r) const { return outer_[r] - inner_[r]; }
  int boxes() const { return outer_.weight() - inner_.weight(); }
  bool is_straight() const { return inner_.weight() == 0; }
  bool has_box(std::size_t r, int c) const {
    return r < ambient() && c >= inner_[r] && c < outer_[r];
  }
  /// rho = outer - inner as a composition.
  Composition row_lengths() const;

  auto operator<=>(const SkewShape&) const = default;

 private:
  Partition outer_, inner_;
};

/// Rows are stored left to right; row r occupies columns inner_r .. outer_r - 1.
class SkewTableau {
 public:
  SkewTableau() = default;
  /// Throws unless rows fill the shape semistandardly with positive letters.
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);
  /// Straight tableau padded to ambient n (n >= number of rows).
  static SkewTableau straight(std::vector<std::vector<int>> rows, std::size_t n);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::size_t ambient() const { return shape_.ambient(); }
  int boxes() const { return shape_.boxes(); }
  int at(std::size_t r, int c) const {
    return rows_[r][static_cast<std::size_t>(c - shape_.inner()[r])];
  }
  /// Column c read top to bottom (present boxes only).
  std::vector<int> column(int c) const;
  int max_letter() const;

  /// Reverse-row reading word: right to left, top row first.
  Word reading_word() const;
  /// Letter multiplicities, length n (default: ambient).
  Composition weight() const { return weight(ambient()); }
  Composition weight(std::size_t n) const;

  /// Rows without trailing empty rows, for ambient-independent comparison.
  std::vector<std::vector<int>> trimmed_rows() const;

  auto operator<=>(const SkewTableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// All tableaux of outer/inner with row r entries <= min(row_bounds[r], n),
/// n = ambient length. Lexicographic order of the row-major fillings.
/// Empty when inner is not contained in outer. Bounds need not form a Flag.
std::vector<SkewTableau> enumerate_tableaux(const Partition& outer, const Partition& inner,
                                            std::span<const int> row_bounds);
std::vector<SkewTableau> enumerate_tableaux(const SkewShape& shape, std::span<const int> row_bounds);

/// Row r filled with the letter r+1, lambda_r times.
SkewTableau dominant_tableau(const Partition& lambda);

/// Schensted row insertion; returns the (row, column) of the new box.
std::pair<std::size_t, std::size_t> row_insert(std::vector<std::vector<int>>& rows, int x);
/// Column insertion; returns the (row, column) of the new box.
std::pair<std::size_t, std::size_t> column_insert(std::vector<std::vector<int>>& rows, int x);
/// Insertion tableau of a word by successive row insertion.
SkewTableau insertion_tableau(std::span<const int> word, std::size_t n);

/// Jeu-de-taquin rectification, always sliding into the lowest inner corner.
SkewTableau rectify(const SkewTableau& t);
/// Rectification with inner corners chosen uniformly at random.
SkewTableau rectify_random(const SkewTableau& t, std::mt19937& rng);

/// Text rendering, one row per line, "." for inner boxes.
std::string render(const SkewTableau& t);

}  // namespace skewlr
