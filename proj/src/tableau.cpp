#include "skewlr/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewlr {

std::string word_string(std::span<const int> w) {
  bool wide = std::any_of(w.begin(), w.end(), [](int x) { return x > 9; });
  if (wide) return join_ints(w, ",");
  std::string s;
  for (int x : w) s += static_cast<char>('0' + x);
  return s;
}

Word parse_word(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return parse_int_list(text);
  Word w;
  for (char c : text) {
    if (c == ' ') continue;
    if (c < '1' || c > '9') throw std::invalid_argument("bad letter in word '" + std::string(text) + "'");
    w.push_back(c - '0');
  }
  return w;
}

// ---------------------------------------------------------------------------

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (outer_.size() != inner_.size()) throw std::invalid_argument("skew shape ambient mismatch");
  if (!outer_.contains(inner_)) throw std::invalid_argument("inner shape not contained in outer");
}

Composition SkewShape::row_lengths() const {
  std::vector<int> rho(ambient());
  for (std::size_t r = 0; r < ambient(); ++r) rho[r] = row_length(r);
  return Composition(std::move(rho));
}

// ---------------------------------------------------------------------------

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.ambient()) throw std::invalid_argument("tableau row count mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.row_length(r))
      throw std::invalid_argument("tableau row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t k = 0; k < rows_[r].size(); ++k) {
      if (rows_[r][k] < 1) throw std::invalid_argument("tableau letters must be positive");
      if (k > 0 && rows_[r][k] < rows_[r][k - 1])
        throw std::invalid_argument("tableau rows must weakly increase");
    }
    if (r == 0) continue;
    for (int c = shape_.inner()[r]; c < shape_.outer()[r]; ++c)
      if (shape_.has_box(r - 1, c) && at(r - 1, c) >= at(r, c))
        throw std::invalid_argument("tableau columns must strictly increase");
  }
}

SkewTableau SkewTableau::straight(std::vector<std::vector<int>> rows, std::size_t n) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.size() > n) throw std::invalid_argument("tableau has more rows than the ambient length");
  std::vector<int> shape(n, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) shape[r] = static_cast<int>(rows[r].size());
  rows.resize(n);
  return SkewTableau(SkewShape::straight(Partition(std::move(shape))), std::move(rows));
}

std::vector<int> SkewTableau::column(int c) const {
  std::vector<int> out;
  for (std::size_t r = 0; r < ambient(); ++r)
    if (shape_.has_box(r, c)) out.push_back(at(r, c));
  return out;
}

int SkewTableau::max_letter() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int x : row) m = std::max(m, x);
  return m;
}

Word SkewTableau::reading_word() const {
  Word w;
  w.reserve(static_cast<std::size_t>(boxes()));
  for (const auto& row : rows_) w.insert(w.end(), row.rbegin(), row.rend());
  return w;
}

Composition SkewTableau::weight(std::size_t n) const {
  std::vector<int> wt(n, 0);
  for (const auto& row : rows_)
    for (int x : row) {
      if (x > static_cast<int>(n)) throw std::out_of_range("tableau letter exceeds weight length");
      ++wt[static_cast<std::size_t>(x - 1)];
    }
  return Composition(std::move(wt));
}

std::vector<std::vector<int>> SkewTableau::trimmed_rows() const {
  auto rows = rows_;
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return rows;
}

// ---------------------------------------------------------------------------

std::vector<SkewTableau> enumerate_tableaux(const Partition& outer, const Partition& inner,
                                            std::span<const int> row_bounds) {
  if (outer.size() != inner.size()) throw std::invalid_argument("skew shape ambient mismatch");
  if (!outer.contains(inner)) return {};
  return enumerate_tableaux(SkewShape(outer, inner), row_bounds);
}

std::vector<SkewTableau> enumerate_tableaux(const SkewShape& shape, std::span<const int> row_bounds) {
  const std::size_t n = shape.ambient();
  if (row_bounds.size() != n) throw std::invalid_argument("row bounds length must equal ambient n");
  std::vector<SkewTableau> out;
  std::vector<std::vector<int>> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r].assign(static_cast<std::size_t>(shape.row_length(r)), 0);

  // Row-major cells.
  std::vector<std::pair<std::size_t, int>> cells;
  for (std::size_t r = 0; r < n; ++r)
    for (int c = shape.inner()[r]; c < shape.outer()[r]; ++c) cells.emplace_back(r, c);

  auto value = [&](std::size_t r, int c) -> int& {
    return rows[r][static_cast<std::size_t>(c - shape.inner()[r])];
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.emplace_back(shape, rows);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > shape.inner()[r]) lo = std::max(lo, value(r, c - 1));
    if (r > 0 && shape.has_box(r - 1, c)) lo = std::max(lo, value(r - 1, c) + 1);
    int hi = std::min(row_bounds[r], static_cast<int>(n));
    for (int v = lo; v <= hi; ++v) {
      value(r, c) = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

SkewTableau dominant_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r)
    rows[r].assign(static_cast<std::size_t>(lambda[r]), static_cast<int>(r + 1));
  return SkewTableau(SkewShape::straight(lambda), std::move(rows));
}

// ---------------------------------------------------------------------------

std::pair<std::size_t, std::size_t> row_insert(std::vector<std::vector<int>>& rows, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {r, row.size() - 1};
    }
    std::swap(*it, x);
  }
}

std::pair<std::size_t, std::size_t> column_insert(std::vector<std::vector<int>>& rows, int x) {
  for (std::size_t c = 0;; ++c) {
    // Column c consists of rows[r][c] for the rows long enough.
    std::size_t r = 0;
    while (r < rows.size() && rows[r].size() > c && rows[r][c] < x) ++r;
    if (r < rows.size() && rows[r].size() > c) {
      std::swap(rows[r][c], x);  // bump the smallest entry >= x
      continue;
    }
    if (r == rows.size()) rows.emplace_back();
    rows[r].push_back(x);
    return {r, c};
  }
}

SkewTableau insertion_tableau(std::span<const int> word, std::size_t n) {
  std::vector<std::vector<int>> rows;
  for (int x : word) row_insert(rows, x);
  return SkewTableau::straight(std::move(rows), std::max(n, rows.size()));
}

// ---------------------------------------------------------------------------

namespace {

// Dense grid: grid[r][c] for c < outer_r; 0 marks an empty (inner) cell.
struct SlideGrid {
  std::vector<std::vector<int>> cells;
  std::vector<int> inner;

  explicit SlideGrid(const SkewTableau& t) : inner(t.shape().inner().parts()) {
    const auto& sh = t.shape();
    cells.resize(sh.ambient());
    for (std::size_t r = 0; r < sh.ambient(); ++r) {
      cells[r].assign(static_cast<std::size_t>(sh.outer()[r]), 0);
      for (int c = sh.inner()[r]; c < sh.outer()[r]; ++c) cells[r][static_cast<std::size_t>(c)] = t.at(r, c);
    }
  }

  std::vector<std::size_t> inner_corners() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < inner.size(); ++r) {
      if (inner[r] == 0) continue;
      bool below_ok = r + 1 == inner.size() || inner[r + 1] < inner[r];
      if (below_ok) out.push_back(r);
    }
    return out;
  }

  bool filled(std::size_t r, std::size_t c) const {
    return r < cells.size() && c < cells[r].size() && cells[r][c] != 0;
  }

  void slide(std::size_t r) {
    std::size_t c = static_cast<std::size_t>(inner[r] - 1);
    --inner[r];
    while (true) {
      bool right = filled(r, c + 1), below = filled(r + 1, c);
      if (!right && !below) break;
      if (below && (!right || cells[r + 1][c] <= cells[r][c + 1])) {
        cells[r][c] = cells[r + 1][c];
        cells[r + 1][c] = 0;
        ++r;
      } else {
        cells[r][c] = cells[r][c + 1];
        cells[r][c + 1] = 0;
        ++c;
      }
    }
    // The vacated cell is always the last cell of its row.
    cells[r].pop_back();
  }

  SkewTableau result(std::size_t n) const {
    std::vector<std::vector<int>> rows;
    for (const auto& row : cells) rows.push_back(row);
    return SkewTableau::straight(std::move(rows), n);
  }
};

}  // namespace

SkewTableau rectify(const SkewTableau& t) {
  SlideGrid g(t);
  for (auto corners = g.inner_corners(); !corners.empty(); corners = g.inner_corners())
    g.slide(corners.back());
  return g.result(t.ambient());
}

SkewTableau rectify_random(const SkewTableau& t, std::mt19937& rng) {
  SlideGrid g(t);
  for (auto corners = g.inner_corners(); !corners.empty(); corners = g.inner_corners()) {
    std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
    g.slide(corners[pick(rng)]);
  }
  return g.result(t.ambient());
}

std::string render(const SkewTableau& t) {
  std::ostringstream os;
  const int width = t.max_letter() > 9 ? 3 : 2;
  for (std::size_t r = 0; r < t.ambient(); ++r) {
    if (t.shape().outer()[r] == 0) continue;
    std::string line;
    for (int c = 0; c < t.shape().outer()[r]; ++c) {
      std::string cell = c < t.shape().inner()[r] ? "." : std::to_string(t.at(r, c));
      line += std::string(static_cast<std::size_t>(width) - cell.size(), ' ') + cell;
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace skewlr
