#pragma once

// Index language shared by every module: partitions, compositions, flags,
// permutations and reduced words. All sequences carry an explicit ambient
// length n; partitions keep their trailing zeros.

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewlr {

/// Parse "3,1,1,0" into integers. Whitespace is ignored; "" gives {}.
std::vector<int> parse_int_list(std::string_view text);
std::string join_ints(std::span<const int> values, std::string_view sep = ",");

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  static Composition zero(std::size_t n) { return Composition(std::vector<int>(n, 0)); }

  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  int weight() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing, nonnegative, fixed ambient length.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition zero(std::size_t n) { return Partition(std::vector<int>(n, 0)); }
  /// Parses a comma list and pads with zeros up to n; throws if it does not fit.
  static Partition parse(std::string_view text, std::size_t n);

  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  /// Index of the last nonzero part (1-based), 0 for the zero partition.
  std::size_t length() const;
  bool contains(const Partition& other) const;  // this_i >= other_i for all i
  Partition scaled(int k) const;
  Composition as_composition() const { return Composition(parts_); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Weakly increasing positive bounds with last entry equal to n.
class Flag {
 public:
  Flag() = default;
  /// Throws std::invalid_argument naming the violated condition.
  explicit Flag(std::vector<int> bounds);
  static Flag standard(std::size_t n);  // (1,2,...,n)
  static Flag full(std::size_t n);      // (n,...,n)
  static Flag parse(std::string_view text, std::size_t n);

  std::size_t size() const { return bounds_.size(); }
  int operator[](std::size_t i) const { return bounds_[i]; }
  const std::vector<int>& bounds() const { return bounds_; }

  auto operator<=>(const Flag&) const = default;

 private:
  std::vector<int> bounds_;
};

struct FlagCheck {
  std::optional<Flag> flag;
  std::string violation;  // empty when accepted
  explicit operator bool() const { return flag.has_value(); }
};

FlagCheck validate_flag(std::span<const int> bounds, std::size_t n);

/// Every valid flag of length n, in lexicographic order.
std::vector<Flag> all_flags(std::size_t n);

/// One-line notation over {1..n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(std::size_t n);
  static Permutation longest(std::size_t n);
  static Permutation simple(std::size_t n, int i);  // s_i, 1 <= i < n
  static Permutation from_word(std::size_t n, std::span<const int> word);

  std::size_t size() const { return w_.size(); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }
  int length() const;  // inversion count
  Permutation inverse() const;
  /// Composition as maps: (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& rhs) const;
  /// Left action on n-tuples: (w.v)_i = v_{w^{-1}(i)}.
  std::vector<int> act(std::span<const int> v) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Partial sums (0, l1, l1+l2, ..., |l|).
std::vector<int> partial_sums(const Partition& lambda);
std::vector<int> partial_sums(std::span<const int> values);

/// alpha^dagger together with the minimal-length w with w.alpha^dagger = alpha.
/// Equal parts keep their relative order.
std::pair<Partition, Permutation> sort_to_partition(const Composition& alpha);

/// Reduced word (i_1,...,i_k) with w = s_{i_1} ... s_{i_k}, by repeatedly
/// stripping the first right descent.
std::vector<int> reduced_word(const Permutation& w);

/// All partitions of `total` with at most n parts, padded to n, in reverse
/// lexicographic order (largest first).
std::vector<Partition> partitions_of(int total, std::size_t n);
/// All partitions with weight <= max_weight and at most n parts.
std::vector<Partition> partitions_up_to(int max_weight, std::size_t n);
/// All compositions of `total` with n parts.
std::vector<Composition> compositions_of(int total, std::size_t n);
/// Partitions contained in mu (componentwise).
std::vector<Partition> partitions_inside(const Partition& mu);

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const Flag& f);
std::ostream& operator<<(std::ostream& os, const Permutation& w);

}  // namespace skewlr
