#pragma once

// Skew Gelfand-Tsetlin patterns, the pattern/tableau bijection, skew hive
// parallelograms with their rhombus contents, triangular hives with Kogan
// faces, and the embedding of the former into the latter.
//
// Parallelogram nodes are (i, j), 0 <= i, j <= n, row i drawn half a unit to
// the left of row i-1. Triangle nodes are (I, j), 0 <= j <= I <= N, apex first.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewlr/combinatorics.hpp"
#include "skewlr/lattice.hpp"
#include "skewlr/tableau.hpp"

namespace skewlr {

template <class S>
using Grid = std::vector<std::vector<S>>;

// ---------------------------------------------------------------------------
// Patterns

/// rows[0] = gamma, rows[m] = mu; every row has length n.
struct SkewGTPattern {
  Grid<int> rows;
  std::size_t height() const { return rows.empty() ? 0 : rows.size() - 1; }
  std::size_t width() const { return rows.empty() ? 0 : rows[0].size(); }
  bool operator==(const SkewGTPattern&) const = default;
};

/// Empty string when the pattern interlaces; otherwise the first failing inequality.
std::string gt_violation(const SkewGTPattern& x);

/// Row j of the tableau holds x_{ij} - x_{(i-1)j} copies of i. Requires m = n.
SkewTableau upsilon(const SkewGTPattern& x);
/// x_{ij} = gamma_j + #{entries <= i in row j}.
SkewGTPattern upsilon_inverse(const SkewTableau& t);

/// Integral patterns from gamma to mu with x_{ij} = mu_j for i >= bounds_j.
std::vector<SkewGTPattern> enumerate_flagged_gt_points(const Partition& mu, const Partition& gamma,
                                                       std::span<const int> row_bounds,
                                                       std::size_t max_visits = 1000000);

// ---------------------------------------------------------------------------
// Skew hives

struct HiveBoundary {
  Partition lambda, mu, gamma, nu;
  std::size_t n() const { return lambda.size(); }
  /// Throws std::invalid_argument on ambient mismatch or |lambda|+|mu| != |gamma|+|nu|.
  void check() const;
  HiveBoundary scaled(int k) const { return {lambda.scaled(k), mu.scaled(k), gamma.scaled(k), nu.scaled(k)}; }
};

struct SkewHive {
  Grid<long long> h;  // (n+1) x (n+1)
  std::size_t n() const { return h.empty() ? 0 : h.size() - 1; }
  bool operator==(const SkewHive&) const = default;
};

/// Rhombus contents of the parallelogram. A policy so that tests can swap in
/// a deliberately wrong formula.
struct StandardContents {
  template <class S>
  static S ne(const Grid<S>& h, std::size_t i, std::size_t j) {  // 1 <= i, j <= n
    return h[i][j] + h[i - 1][j - 1] - h[i - 1][j] - h[i][j - 1];
  }
  template <class S>
  static S se(const Grid<S>& h, std::size_t i, std::size_t j) {  // 1 <= i <= n, 1 <= j <= n-1
    return h[i - 1][j] + h[i][j] - h[i - 1][j - 1] - h[i][j + 1];
  }
  template <class S>
  static S vert(const Grid<S>& h, std::size_t i, std::size_t k) {  // 1 <= i <= n-1, 0 <= k <= n-1
    return h[i][k] + h[i][k + 1] - h[i - 1][k] - h[i + 1][k + 1];
  }
};

enum class RhombusKind { ne, se, vertical };
std::string to_string(RhombusKind k);

template <class S>
struct RhombusViolation {
  RhombusKind kind;
  std::size_t i, j;
  S content;
};

template <class S>
struct HiveReport {
  std::vector<std::string> boundary;             // mismatched boundary nodes
  std::vector<RhombusViolation<S>> negative;     // every rhombus with negative content
  std::vector<RhombusViolation<S>> not_flat;     // flag region rhombi with nonzero content
  bool valid() const { return boundary.empty() && negative.empty() && not_flat.empty(); }
  std::string summary() const;
};

/// NE rhombi R_{ij} with i >= Phi_j + 1: the region required to be flat.
std::vector<std::pair<std::size_t, std::size_t>> flat_region(std::span<const int> bounds);

/// Checks boundary, every content family and (if bounds given) flatness of R(Phi).
/// Throws std::invalid_argument on a weight mismatch or wrong grid size.
template <class S, class Contents = StandardContents>
HiveReport<S> validate_skew_hive(const Grid<S>& h, const HiveBoundary& b,
                                 std::optional<std::span<const int>> flag = std::nullopt);

/// Row differences: row i of the pattern is (h_{i,j} - h_{i,j-1})_j.
SkewGTPattern partial_diff(const SkewHive& h);
/// h_{i,0} = partial sums of lambda, then cumulative sums of pattern rows.
SkewHive hive_from_gt(const SkewGTPattern& x, const Partition& lambda);

struct SkewHiveCount {
  std::size_t points = 0;
  std::vector<SkewHive> hives;  // filled only when requested
};

/// Integral points of the flagged skew hive polytope.
SkewHiveCount enumerate_skew_hive_points(const HiveBoundary& b, const Flag& phi, bool keep = true,
                                         std::size_t max_visits = 1000000);

// ---------------------------------------------------------------------------
// Triangular hives

struct TriHive {
  Grid<long long> h;  // row I has I+1 labels
  std::size_t size() const { return h.empty() ? 0 : h.size() - 1; }
  bool operator==(const TriHive&) const = default;
};

/// Empty string if valid; otherwise a description of the first failure. The
/// optional flag (length N) demands R_{Ij} flat for N > I >= flag_j.
std::string tri_hive_violation(const TriHive& t, const Partition& alpha, const Partition& beta,
                               const Partition& gamma, std::optional<std::span<const int>> flag = std::nullopt);

struct TriHiveCount {
  std::size_t points = 0;
  std::vector<TriHive> hives;
};

/// Integral points of Hive(alpha, beta, gamma), optionally on the Kogan face of flag.
/// Throws std::invalid_argument if |alpha| + |beta| != |gamma|.
TriHiveCount enumerate_tri_hive_points(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                       std::optional<std::span<const int>> flag = std::nullopt, bool keep = true,
                                       std::size_t max_visits = 1000000);

// ---------------------------------------------------------------------------
// Lift to twice the size

struct LiftedData {
  Partition lambda, mu, nu;  // ambient 2n
  Flag phi;                  // length 2n
};

/// Throws std::invalid_argument unless gamma is inside mu, lambda inside nu and weights balance.
LiftedData lift_tilde(const HiveBoundary& b, const Flag& phi);

TriHive psi(const SkewHive& h, const HiveBoundary& b);
SkewHive psi_inverse(const TriHive& t, std::size_t n, int nu1);

// ---------------------------------------------------------------------------
// Text rendering, rows centred so that the geometry is visible.

std::string render(const SkewHive& h);
std::string render(const TriHive& t);
std::string render(const SkewGTPattern& x);

// ---------------------------------------------------------------------------

template <class S>
std::string HiveReport<S>::summary() const {
  if (valid()) return "valid";
  std::string s;
  for (const auto& b : boundary) s += "boundary: " + b + "\n";
  auto put = [&](const char* what, const RhombusViolation<S>& v) {
    s += std::string(what) + " " + to_string(v.kind) + "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")\n";
  };
  for (const auto& v : negative) put("negative", v);
  for (const auto& v : not_flat) put("not flat", v);
  return s;
}

template <class S, class Contents>
HiveReport<S> validate_skew_hive(const Grid<S>& h, const HiveBoundary& b, std::optional<std::span<const int>> flag) {
  b.check();
  const std::size_t n = b.n();
  if (h.size() != n + 1) throw std::invalid_argument("hive must have n+1 rows");
  for (const auto& row : h)
    if (row.size() != n + 1) throw std::invalid_argument("hive rows must have n+1 labels");

  HiveReport<S> r;
  const auto lam = partial_sums(b.lambda), mu = partial_sums(b.mu), gam = partial_sums(b.gamma),
             nu = partial_sums(b.nu);
  const int wl = b.lambda.weight(), wg = b.gamma.weight();
  auto expect = [&](std::size_t i, std::size_t j, int value) {
    if (h[i][j] != S(value))
      r.boundary.push_back("h(" + std::to_string(i) + "," + std::to_string(j) + ") should be " + std::to_string(value));
  };
  for (std::size_t k = 0; k <= n; ++k) {
    expect(k, 0, lam[k]);
    expect(n, k, wl + mu[k]);
    expect(0, k, gam[k]);
    expect(k, n, wg + nu[k]);
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (S c = Contents::ne(h, i, j); c < S(0)) r.negative.push_back({RhombusKind::ne, i, j, c});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j + 1 <= n; ++j)
      if (S c = Contents::se(h, i, j); c < S(0)) r.negative.push_back({RhombusKind::se, i, j, c});
  for (std::size_t i = 1; i + 1 <= n; ++i)
    for (std::size_t k = 0; k + 1 <= n; ++k)
      if (S c = Contents::vert(h, i, k); c < S(0)) r.negative.push_back({RhombusKind::vertical, i, k, c});
  if (flag) {
    if (flag->size() != n) throw std::invalid_argument("flag length must equal n");
    for (auto [i, j] : flat_region(*flag))
      if (S c = Contents::ne(h, i, j); c != S(0)) r.not_flat.push_back({RhombusKind::ne, i, j, c});
  }
  return r;
}

}  // namespace skewlr
