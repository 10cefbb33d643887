#include "skewlr/burge.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewlr {

void Biword::check() const {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k].first < 1 || columns[k].second < 1) throw std::invalid_argument("biword letters must be positive");
    if (k == 0) continue;
    auto [i0, j0] = columns[k - 1];
    auto [i1, j1] = columns[k];
    if (i1 < i0) throw std::invalid_argument("biword top row must be weakly increasing");
    if (j1 > j0 && i1 == i0) throw std::invalid_argument("biword top row must increase where the bottom row does");
  }
}

std::vector<int> Biword::top() const {
  std::vector<int> out;
  for (auto [i, j] : columns) out.push_back(i);
  return out;
}

std::vector<int> Biword::bottom() const {
  std::vector<int> out;
  for (auto [i, j] : columns) out.push_back(j);
  return out;
}

std::string Biword::display() const {
  auto t = top(), b = bottom();
  std::reverse(t.begin(), t.end());
  std::reverse(b.begin(), b.end());
  std::size_t w = 1;
  for (int x : t) w = std::max(w, std::to_string(x).size());
  for (int x : b) w = std::max(w, std::to_string(x).size());
  auto line = [&](const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      auto x = std::to_string(v[k]);
      s += (k ? " " : "") + std::string(w - x.size(), ' ') + x;
    }
    return s;
  };
  return line(t) + "\n" + line(b) + "\n";
}

Biword make_biword(std::span<const int> top, std::span<const int> bottom) {
  if (top.size() != bottom.size()) throw std::invalid_argument("biword rows differ in length");
  Biword w;
  for (std::size_t k = 0; k < top.size(); ++k) w.columns.emplace_back(top[k], bottom[k]);
  w.check();
  return w;
}

Biword biword_from_matrix(const IntegerMatrix& m) {
  Biword w;
  for (std::size_t r = m.size(); r-- > 0;)
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (m[r][c] < 0) throw std::invalid_argument("matrix entries must be nonnegative");
      for (int k = 0; k < m[r][c]; ++k) w.columns.emplace_back(static_cast<int>(r + 1), static_cast<int>(c + 1));
    }
  // Read back to front, so reverse into processing order.
  std::reverse(w.columns.begin(), w.columns.end());
  return w;
}

IntegerMatrix matrix_from_biword(const Biword& w, std::size_t r, std::size_t n) {
  IntegerMatrix m(r, std::vector<int>(n, 0));
  for (auto [i, j] : w.columns) {
    if (i > static_cast<int>(r) || j > static_cast<int>(n)) throw std::out_of_range("biword letter exceeds matrix size");
    ++m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  return m;
}

IntegerMatrix transpose(const IntegerMatrix& m) {
  if (m.empty()) return {};
  IntegerMatrix t(m[0].size(), std::vector<int>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
  return t;
}

BurgePair burge(const Biword& w) {
  w.check();
  BurgePair out;
  for (auto [i, j] : w.columns) {
    auto [r, c] = column_insert(out.p, j);
    if (r == out.q.size()) out.q.emplace_back();
    if (out.q[r].size() != c) throw std::logic_error("burge: recording box is not an outer corner");
    out.q[r].push_back(i);
  }
  return out;
}

bool is_compatible(std::span<const int> i, std::span<const int> a, std::span<const int> bounds) {
  if (i.size() != a.size()) throw std::invalid_argument("words differ in length");
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (a[k] < 1 || a[k] > static_cast<int>(bounds.size())) throw std::out_of_range("letter outside the flag");
    if (i[k] > bounds[static_cast<std::size_t>(a[k] - 1)]) return false;
  }
  return true;
}

bool is_j_phi_compatible(const Biword& w, const Flag& phi) {
  auto i = w.top(), j = w.bottom();
  return is_compatible(i, j, phi.bounds());
}

// ---------------------------------------------------------------------------

Rows reverse_filling(const SkewShape& shape) {
  Rows rows(shape.ambient());
  int next = 1;
  for (std::size_t r = 0; r < shape.ambient(); ++r) {
    rows[r].resize(static_cast<std::size_t>(shape.row_length(r)));
    for (auto it = rows[r].rbegin(); it != rows[r].rend(); ++it) *it = next++;
  }
  return rows;
}

namespace {

// Position (row, absolute column) of each letter of a standard tableau.
std::map<int, std::pair<int, int>> positions(const SkewTableau& t) {
  std::map<int, std::pair<int, int>> pos;
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t k = 0; k < t.rows()[r].size(); ++k)
      pos[t.rows()[r][k]] = {static_cast<int>(r), t.shape().inner()[r] + static_cast<int>(k)};
  return pos;
}

}  // namespace

bool is_shape_compatible(const SkewTableau& q, const SkewShape& shape) {
  if (q.boxes() != shape.boxes()) throw std::invalid_argument("tableau and shape differ in size");
  auto pq = positions(q);
  if (static_cast<int>(pq.size()) != q.boxes() || (!pq.empty() && (pq.begin()->first != 1 || pq.rbegin()->first != q.boxes())))
    throw std::invalid_argument("tableau is not standard");
  auto rf = reverse_filling(shape);
  for (std::size_t r = 0; r < shape.ambient(); ++r) {
    const auto& row = rf[r];
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      // row[k] = i + 1 sits directly left of row[k+1] = i.
      auto [ri, ci] = pq[row[k + 1]];
      auto [rn, cn] = pq[row[k]];
      if (!(rn <= ri && cn > ci)) return false;
    }
    if (r + 1 < shape.ambient())
      for (int c = shape.inner()[r + 1]; c < shape.outer()[r + 1]; ++c)
        if (shape.has_box(r, c)) {
          int i = rf[r][static_cast<std::size_t>(c - shape.inner()[r])];
          int j = rf[r + 1][static_cast<std::size_t>(c - shape.inner()[r + 1])];
          auto [ri, ci] = pq[i];
          auto [rj, cj] = pq[j];
          if (!(cj <= ci && rj > ri)) return false;
        }
  }
  return true;
}

std::vector<SkewTableau> standard_tableaux(const Partition& nu) {
  std::vector<SkewTableau> out;
  const int total = nu.weight();
  std::vector<std::vector<int>> rows(nu.size());
  auto rec = [&](auto&& self, int next) -> void {
    if (next > total) {
      out.push_back(SkewTableau::straight(rows, nu.size()));
      return;
    }
    for (std::size_t r = 0; r < nu.size(); ++r) {
      const auto len = rows[r].size();
      if (static_cast<int>(len) >= nu[r]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(next);
      self(self, next + 1);
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

SkewTableau standardize(const SkewTableau& t) {
  // Equal letters form a horizontal strip, so left to right is column order.
  std::vector<std::tuple<int, int, std::size_t>> cells;  // (letter, column, row)
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t k = 0; k < t.rows()[r].size(); ++k)
      cells.emplace_back(t.rows()[r][k], t.shape().inner()[r] + static_cast<int>(k), r);
  std::sort(cells.begin(), cells.end());
  auto rows = t.rows();
  int next = 1;
  for (auto [x, c, r] : cells) rows[r][static_cast<std::size_t>(c - t.shape().inner()[r])] = next++;
  return SkewTableau(t.shape(), std::move(rows));
}

// ---------------------------------------------------------------------------

SkewTableau key_tableau(const Composition& alpha) {
  const std::size_t n = alpha.size();
  int width = 0;
  for (std::size_t k = 0; k < n; ++k) width = std::max(width, alpha[k]);
  std::vector<std::vector<int>> rows(n);
  for (int c = 0; c < width; ++c) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (alpha[k] > c) rows[r++].push_back(static_cast<int>(k + 1));
  }
  return SkewTableau::straight(std::move(rows), n);
}

bool is_key(const SkewTableau& t) {
  if (!t.shape().is_straight()) return false;
  const int width = t.shape().outer()[0];
  for (int c = 0; c + 1 < width; ++c) {
    auto a = t.column(c), b = t.column(c + 1);
    if (!std::includes(a.begin(), a.end(), b.begin(), b.end())) return false;
  }
  return true;
}

Word essential_subword(std::span<const int> a, int L) {
  if (a.empty()) return {};
  const int last = a.back();
  auto head = a.first(a.size() - 1);
  if (last < L) {
    Word w = essential_subword(head, last);
    w.push_back(last);
    return w;
  }
  return essential_subword(head, L);
}

std::vector<std::size_t> ascents(std::span<const int> a) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < a.size(); ++k)
    if (a[k] < a[k + 1]) out.push_back(k + 1);
  return out;
}

// ---------------------------------------------------------------------------

Word column_word(const SkewTableau& t) {
  Word w;
  if (t.rows().empty()) return w;
  const int width = t.shape().outer()[0];
  for (int c = 0; c < width; ++c) {
    auto col = t.column(c);
    w.insert(w.end(), col.rbegin(), col.rend());
  }
  return w;
}

namespace {

using Column = std::vector<int>;  // increasing, top to bottom

// Two-column tableau (a | b), |a| >= |b|, rearranged into the Knuth-equivalent
// skew pair (b' | a') with b' sitting at the bottom of a'. Done by reverse
// slides filling the right column from row |b| down.
std::pair<Column, Column> switch_columns(const Column& a, const Column& b) {
  const std::size_t la = a.size(), lb = b.size();
  // grid[r] = {left, right}; 0 marks a hole.
  std::vector<std::array<int, 2>> g(la, {0, 0});
  for (std::size_t r = 0; r < la; ++r) g[r][0] = a[r];
  for (std::size_t r = 0; r < lb; ++r) g[r][1] = b[r];
  for (std::size_t extra = lb; extra < la; ++extra) {
    // Hole at (extra, 1); slide inward until it leaves the shape at the top left.
    std::size_t r = extra;
    int c = 1;
    while (true) {
      const int north = (r > 0 && g[r - 1][c] != 0) ? g[r - 1][c] : 0;
      const int west = (c > 0 && g[r][c - 1] != 0) ? g[r][c - 1] : 0;
      if (north == 0 && west == 0) break;
      if (west > north) {
        g[r][c] = west;
        g[r][c - 1] = 0;
        --c;
      } else {
        g[r][c] = north;
        g[r - 1][c] = 0;
        --r;
      }
    }
  }
  Column left, right;
  for (std::size_t r = 0; r < la; ++r) {
    if (g[r][0] != 0) left.push_back(g[r][0]);
    right.push_back(g[r][1]);
  }
  if (left.size() != lb) throw std::logic_error("column switch produced the wrong shape");
  return {left, right};
}

std::vector<Column> columns_of(const SkewTableau& t) {
  std::vector<Column> cols;
  if (t.rows().empty()) return cols;
  for (int c = 0; c < t.shape().outer()[0]; ++c) cols.push_back(t.column(c));
  return cols;
}

SkewTableau from_columns(const std::vector<Column>& cols, std::size_t n) {
  std::vector<std::vector<int>> rows;
  for (const auto& col : cols)
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (rows.size() <= r) rows.resize(r + 1);
      rows[r].push_back(col[r]);
    }
  return SkewTableau::straight(std::move(rows), std::max(n, rows.size()));
}

}  // namespace

SkewTableau left_key(const SkewTableau& t) {
  if (!t.shape().is_straight()) throw std::invalid_argument("left_key needs a straight tableau");
  auto cols = columns_of(t);
  std::vector<Column> key(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column carried = cols[j];
    for (std::size_t k = j; k-- > 0;) carried = switch_columns(cols[k], carried).first;
    key[j] = carried;
  }
  return from_columns(key, t.ambient());
}

std::set<Word> knuth_class(const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word u = std::move(todo.front());
    todo.pop_front();
    for (std::size_t k = 0; k + 2 < u.size(); ++k) {
      const int x = u[k], y = u[k + 1], z = u[k + 2];
      auto push = [&](Word v) {
        if (seen.insert(v).second) todo.push_back(std::move(v));
      };
      Word v = u;
      // y x z <-> y z x for x < y <= z
      if (y < x && x <= z) std::swap(v[k + 1], v[k + 2]), push(v), v = u;
      if (z < x && x <= y) std::swap(v[k + 1], v[k + 2]), push(v), v = u;
      // x z y <-> z x y for x <= y < z
      if (x <= z && z < y) std::swap(v[k], v[k + 1]), push(v), v = u;
      if (y <= z && z < x) std::swap(v[k], v[k + 1]), push(v), v = u;
    }
  }
  return seen;
}

SkewTableau left_key_by_knuth_class(const SkewTableau& t) {
  if (!t.shape().is_straight()) throw std::invalid_argument("left_key needs a straight tableau");
  auto cols = columns_of(t);
  std::vector<std::size_t> lengths;
  for (const auto& c : cols) lengths.push_back(c.size());
  std::map<std::size_t, Column> first_by_length;
  auto lens = lengths;
  std::sort(lens.begin(), lens.end());
  for (const auto& u : knuth_class(column_word(t))) {
    auto order = lens;
    do {
      // Split u into decreasing factors of the given lengths.
      std::size_t pos = 0;
      bool ok = true;
      for (std::size_t len : order) {
        for (std::size_t k = pos + 1; k < pos + len; ++k)
          if (u[k] >= u[k - 1]) ok = false;
        pos += len;
        if (!ok) break;
      }
      if (!ok || order.empty()) continue;
      Column first(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(order[0]));
      std::sort(first.begin(), first.end());
      auto [it, fresh] = first_by_length.emplace(order[0], first);
      if (!fresh && it->second != first) throw std::logic_error("Knuth class gives two first columns of one length");
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::vector<Column> key;
  for (std::size_t len : lengths) key.push_back(first_by_length.at(len));
  return from_columns(key, t.ambient());
}

// ---------------------------------------------------------------------------

std::vector<RecordingClass> class_decomposition(const Partition& mu, const Partition& gamma, const Flag& phi) {
  const std::size_t n = mu.size();
  if (gamma.size() != n || phi.size() != n) throw std::invalid_argument("ambient length mismatch");
  SkewShape shape(mu, gamma);
  std::map<Rows, RecordingClass> classes;
  for (const auto& t : enumerate_tableaux(mu, gamma, phi.bounds())) {
    std::vector<int> top;
    for (std::size_t r = 0; r < n; ++r) top.insert(top.end(), static_cast<std::size_t>(shape.row_length(r)), static_cast<int>(r + 1));
    auto bp = burge(make_biword(top, t.reading_word()));
    if (bp.p != rectify(t).trimmed_rows()) throw std::logic_error("burge insertion tableau differs from the rectification");
    auto it = classes.find(bp.q);
    if (it == classes.end()) {
      auto r = SkewTableau::straight(bp.q, n);
      auto key = left_key(r);
      it = classes.emplace(bp.q, RecordingClass{standardize(r), r, key.weight(n), {}}).first;
    }
    it->second.members.push_back(t);
  }
  std::vector<RecordingClass> out;
  for (auto& [rows, c] : classes) out.push_back(std::move(c));
  return out;
}

}  // namespace skewlr
