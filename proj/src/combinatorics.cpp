#include "skewlr/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewlr {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '(' && c != ')') cleaned.push_back(c);
  if (cleaned.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = cleaned.find(',', pos);
    std::string_view tok(cleaned.data() + pos,
                         (comma == std::string::npos ? cleaned.size() : comma) - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("not an integer list: '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join_ints(std::span<const int> values, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text, std::size_t n) {
  auto v = parse_int_list(text);
  while (v.size() > n && v.back() == 0) v.pop_back();
  if (v.size() > n)
    throw std::invalid_argument("partition '" + std::string(text) + "' has more than " +
                                std::to_string(n) + " parts");
  v.resize(n, 0);
  return Partition(std::move(v));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Partition::length() const {
  std::size_t l = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] != 0) l = i + 1;
  return l;
}

bool Partition::contains(const Partition& other) const {
  if (other.size() != size()) throw std::invalid_argument("ambient length mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (parts_[i] < other.parts_[i]) return false;
  return true;
}

Partition Partition::scaled(int k) const {
  auto v = parts_;
  for (auto& p : v) p *= k;
  return Partition(std::move(v));
}

// ---------------------------------------------------------------------------

FlagCheck validate_flag(std::span<const int> bounds, std::size_t n) {
  FlagCheck out;
  if (bounds.size() != n) {
    out.violation = "flag has " + std::to_string(bounds.size()) + " entries, expected " +
                    std::to_string(n);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bounds[i] < 1) {
      out.violation = "entry " + std::to_string(i + 1) + " is not positive";
      return out;
    }
    if (i > 0 && bounds[i] < bounds[i - 1]) {
      out.violation = "not weakly increasing at entry " + std::to_string(i + 1);
      return out;
    }
  }
  if (n > 0 && bounds[n - 1] != static_cast<int>(n)) {
    out.violation = "last entry must equal n = " + std::to_string(n);
    return out;
  }
  out.flag.emplace(std::vector<int>(bounds.begin(), bounds.end()));
  return out;
}

Flag::Flag(std::vector<int> bounds) : bounds_(std::move(bounds)) {
  const std::size_t n = bounds_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (bounds_[i] < 1)
      throw std::invalid_argument("flag entry " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && bounds_[i] < bounds_[i - 1])
      throw std::invalid_argument("flag not weakly increasing at entry " + std::to_string(i + 1));
  }
  if (n > 0 && bounds_[n - 1] != static_cast<int>(n))
    throw std::invalid_argument("flag last entry must equal n = " + std::to_string(n));
}

Flag Flag::standard(std::size_t n) {
  std::vector<int> b(n);
  std::iota(b.begin(), b.end(), 1);
  return Flag(std::move(b));
}

Flag Flag::full(std::size_t n) { return Flag(std::vector<int>(n, static_cast<int>(n))); }

Flag Flag::parse(std::string_view text, std::size_t n) {
  auto v = parse_int_list(text);
  auto check = validate_flag(v, n);
  if (!check) throw std::invalid_argument("invalid flag '" + std::string(text) + "': " + check.violation);
  return *check.flag;
}

std::vector<Flag> all_flags(std::size_t n) {
  std::vector<Flag> out;
  if (n == 0) return {Flag()};
  std::vector<int> cur(n);
  cur[n - 1] = static_cast<int>(n);
  auto rec = [&](auto&& self, std::size_t i, int lo) -> void {
    if (i + 1 == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lo; v <= static_cast<int>(n); ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 1);
  return out;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(n - i);
  return Permutation(std::move(w));
}

Permutation Permutation::simple(std::size_t n, int i) {
  if (i < 1 || i >= static_cast<int>(n)) throw std::out_of_range("simple reflection index");
  auto w = identity(n).w_;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return Permutation(std::move(w));
}

Permutation Permutation::from_word(std::size_t n, std::span<const int> word) {
  // id * s_{i_1} * ... * s_{i_k}: right multiplication swaps positions.
  auto w = identity(n).w_;
  for (int i : word) {
    if (i < 1 || i >= static_cast<int>(n)) throw std::out_of_range("simple reflection index");
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < w_.size(); ++a)
    for (std::size_t b = a + 1; b < w_.size(); ++b)
      if (w_[a] > w_[b]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i)
    inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = (*this)(rhs.w_[i]);
  return Permutation(std::move(out));
}

std::vector<int> Permutation::act(std::span<const int> v) const {
  if (v.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[static_cast<std::size_t>(w_[j] - 1)] = v[j];
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto w = Permutation::identity(n).one_line();
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> partial_sums(std::span<const int> values) {
  std::vector<int> out(values.size() + 1, 0);
  for (std::size_t i = 0; i < values.size(); ++i) out[i + 1] = out[i] + values[i];
  return out;
}

std::vector<int> partial_sums(const Partition& lambda) { return partial_sums(lambda.parts()); }

std::pair<Partition, Permutation> sort_to_partition(const Composition& alpha) {
  const std::size_t n = alpha.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return alpha[static_cast<std::size_t>(a)] > alpha[static_cast<std::size_t>(b)]; });
  std::vector<int> sorted(n), w(n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted[k] = alpha[static_cast<std::size_t>(order[k])];
    w[k] = order[k] + 1;  // w(k) = position receiving the k-th largest part
  }
  return {Partition(std::move(sorted)), Permutation(std::move(w))};
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> cur = w.one_line();
  std::vector<int> rev;
  while (true) {
    std::size_t i = 0;
    while (i + 1 < cur.size() && cur[i] < cur[i + 1]) ++i;
    if (i + 1 >= cur.size()) break;
    std::swap(cur[i], cur[i + 1]);
    rev.push_back(static_cast<int>(i + 1));
  }
  return {rev.rbegin(), rev.rend()};
}

// ---------------------------------------------------------------------------

std::vector<Partition> partitions_of(int total, std::size_t n) {
  std::vector<Partition> out;
  if (total < 0) return out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining, int cap) -> void {
    if (remaining == 0) {
      std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), 0);
      out.emplace_back(cur);
      return;
    }
    if (i == n) return;
    for (int v = std::min(remaining, cap); v >= 1; --v) {
      cur[i] = v;
      self(self, i + 1, remaining - v, v);
    }
  };
  rec(rec, 0, total, total);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, std::size_t n) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto p = partitions_of(w, n);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::vector<Composition> compositions_of(int total, std::size_t n) {
  std::vector<Composition> out;
  if (n == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == n) {
      cur[i] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::vector<Partition> partitions_inside(const Partition& mu) {
  std::vector<Partition> out;
  const std::size_t n = mu.size();
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(cap, mu[i]); ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, n ? mu[0] : 0);
  return out;
}

// ---------------------------------------------------------------------------

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << join_ints(p.parts()) << ')';
}
std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << '(' << join_ints(c.parts()) << ')';
}
std::ostream& operator<<(std::ostream& os, const Flag& f) {
  return os << '(' << join_ints(f.bounds()) << ')';
}
std::ostream& operator<<(std::ostream& os, const Permutation& w) {
  return os << '[' << join_ints(w.one_line(), " ") << ']';
}

}  // namespace skewlr
