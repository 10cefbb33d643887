#include "skewlr/crystal.hpp"

#include <algorithm>
#include <sstream>

namespace skewlr {

namespace {

void check_index(int i, std::size_t n) {
  if (i < 1 || i >= static_cast<int>(n))
    throw std::out_of_range("crystal index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
}

void check_letters(const Word& w, std::size_t n) {
  for (int x : w)
    if (x < 1 || x > static_cast<int>(n))
      throw std::out_of_range("letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
}

// Unpaired positions of i+1 (left part) and i (right part).
struct Brackets {
  std::vector<std::size_t> open_up;   // unpaired i+1
  std::vector<std::size_t> open_down; // unpaired i
};

Brackets brackets(const Word& w, int i) {
  Brackets b;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i) {
      b.open_down.push_back(k);
    } else if (w[k] == i + 1) {
      if (!b.open_down.empty()) b.open_down.pop_back();
      else b.open_up.push_back(k);
    }
  }
  return b;
}

}  // namespace

std::optional<Word> apply_operator(const Word& w, int i, Direction d, std::size_t n) {
  check_index(i, n);
  check_letters(w, n);
  auto b = brackets(w, i);
  Word out = w;
  if (d == Direction::raise) {
    if (b.open_up.empty()) return std::nullopt;
    out[b.open_up.back()] = i;
  } else {
    if (b.open_down.empty()) return std::nullopt;
    out[b.open_down.front()] = i + 1;
  }
  return out;
}

std::optional<Word> raise(const Word& w, int i, std::size_t n) { return apply_operator(w, i, Direction::raise, n); }
std::optional<Word> lower(const Word& w, int i, std::size_t n) { return apply_operator(w, i, Direction::lower, n); }

std::pair<int, int> epsilon_phi(const Word& w, int i, std::size_t n) {
  check_index(i, n);
  check_letters(w, n);
  auto b = brackets(w, i);
  return {static_cast<int>(b.open_up.size()), static_cast<int>(b.open_down.size())};
}

// ---------------------------------------------------------------------------

std::optional<Word> TensorRecursion::apply(const Word& w, int i, Direction d) {
  check_index(i, n_);
  if (w.empty()) return std::nullopt;
  if (w.size() == 1) {
    check_letters(w, n_);
    if (d == Direction::raise && w[0] == i + 1) return Word{i};
    if (d == Direction::lower && w[0] == i) return Word{i + 1};
    return std::nullopt;
  }
  auto key = std::make_tuple(w, i, static_cast<int>(d));
  if (auto it = ops_.find(key); it != ops_.end()) return it->second;

  Word x(w.begin(), w.end() - 1);
  Word y{w.back()};
  const int eps_y = count(y, i, Direction::raise);
  const int phi_x = count(x, i, Direction::lower);
  const bool act_left = d == Direction::raise ? eps_y <= phi_x : eps_y < phi_x;

  std::optional<Word> result;
  if (act_left) {
    if (auto ex = apply(x, i, d)) {
      ex->push_back(y[0]);
      result = std::move(ex);
    }
  } else if (auto ey = apply(y, i, d)) {
    x.push_back((*ey)[0]);
    result = std::move(x);
  }
  ops_.emplace(std::move(key), result);
  return result;
}

int TensorRecursion::count(const Word& w, int i, Direction d) {
  auto key = std::make_tuple(w, i, static_cast<int>(d));
  if (auto it = counts_.find(key); it != counts_.end()) return it->second;
  int c = 0;
  for (auto cur = apply(w, i, d); cur; cur = apply(*cur, i, d)) ++c;
  counts_.emplace(std::move(key), c);
  return c;
}

std::pair<int, int> TensorRecursion::epsilon_phi(const Word& w, int i) {
  check_index(i, n_);
  check_letters(w, n_);
  return {count(w, i, Direction::raise), count(w, i, Direction::lower)};
}

// ---------------------------------------------------------------------------

Composition word_weight(const Word& w, std::size_t n) {
  check_letters(w, n);
  std::vector<int> wt(n, 0);
  for (int x : w) ++wt[static_cast<std::size_t>(x - 1)];
  return Composition(std::move(wt));
}

IntPolynomial character(const WordSet& s, std::size_t n) {
  IntPolynomial ch(n);
  for (const auto& w : s) ch.add_term(word_weight(w, n).parts(), 1);
  return ch;
}

bool is_dominant(const Word& w, std::size_t n) {
  for (int i = 1; i < static_cast<int>(n); ++i)
    if (raise(w, i, n)) return false;
  return true;
}

bool is_lambda_dominant(const SkewTableau& t, const Partition& lambda) {
  if (lambda.size() != t.ambient()) throw std::invalid_argument("ambient length mismatch");
  Word w = dominant_tableau(lambda).reading_word();
  auto b = t.reading_word();
  w.insert(w.end(), b.begin(), b.end());
  return is_dominant(w, lambda.size());
}

WordSet flagged_word_set(std::span<const int> bounds, const Composition& rho) {
  if (bounds.size() != rho.size()) throw std::invalid_argument("bounds and rho lengths differ");
  std::vector<int> cap;
  for (std::size_t r = 0; r < rho.size(); ++r) cap.insert(cap.end(), static_cast<std::size_t>(rho[r]), bounds[r]);
  WordSet out;
  Word w(cap.size(), 1);
  if (std::any_of(cap.begin(), cap.end(), [](int c) { return c < 1; })) return out;
  while (true) {
    out.insert(w);
    std::size_t k = w.size();
    while (k > 0 && w[k - 1] == cap[k - 1]) w[--k] = 1;
    if (k == 0) break;
    ++w[k - 1];
  }
  return out;
}

WordSet generate_demazure(const Word& b, std::span<const int> reduced, std::size_t n) {
  if (!is_dominant(b, n)) throw std::invalid_argument("generate_demazure: start word is not dominant");
  WordSet cur{b};
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    WordSet next;
    for (const auto& w : cur)
      for (std::optional<Word> x = w; x; x = lower(*x, *it, n)) next.insert(*x);
    cur = std::move(next);
  }
  return cur;
}

std::string StringWitness::describe() const {
  std::ostringstream os;
  os << (failing == Direction::raise ? "e_" : "f_") << i << "(" << word_string(x) << ") = " << word_string(image)
     << " is not in the set";
  return os.str();
}

std::optional<StringWitness> string_property_violation(const WordSet& s, std::size_t n) {
  for (const auto& x : s)
    for (int i = 1; i < static_cast<int>(n); ++i) {
      auto e = raise(x, i, n);
      if (!e) continue;
      if (!s.count(*e)) return StringWitness{x, i, Direction::raise, *e};
      auto f = lower(x, i, n);
      if (f && !s.count(*f)) return StringWitness{x, i, Direction::lower, *f};
    }
  return std::nullopt;
}

std::vector<DemazureComponent> decompose(const WordSet& s, std::size_t n) {
  if (auto v = string_property_violation(s, n)) throw StringPropertyError(*v);
  std::map<Word, WordSet> groups;
  for (const auto& w : s) {
    Word h = w;
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 1; i < static_cast<int>(n) && !moved; ++i)
        if (auto e = raise(h, i, n)) {
          h = std::move(*e);
          moved = true;
        }
    }
    groups[h].insert(w);
  }
  std::vector<DemazureComponent> out;
  for (auto& [head, members] : groups) {
    if (!members.count(head)) throw std::logic_error("component head " + word_string(head) + " is missing");
    auto keys = expand_in_key(character(members, n));
    if (keys.size() != 1 || keys.begin()->second != 1)
      throw std::logic_error("component of head " + word_string(head) + " is not a single key polynomial");
    Partition hw(word_weight(head, n).parts());
    Composition alpha = keys.begin()->first;
    if (sort_to_partition(alpha).first != hw)
      throw std::logic_error("key weight does not sort to the highest weight");
    out.push_back({head, std::move(members), std::move(hw), std::move(alpha)});
  }
  return out;
}

WordSet reading_words(const std::vector<SkewTableau>& ts) {
  WordSet out;
  for (const auto& t : ts) out.insert(t.reading_word());
  return out;
}

WordSet prepend_dominant(const Partition& lambda, const WordSet& s) {
  const Word head = dominant_tableau(lambda).reading_word();
  WordSet out;
  for (const auto& w : s) {
    Word c = head;
    c.insert(c.end(), w.begin(), w.end());
    out.insert(std::move(c));
  }
  return out;
}

std::map<Partition, long long> coefficient_table_by_tableaux(const Partition& lambda, const Partition& mu,
                                                             const Partition& gamma, const Flag& phi) {
  const std::size_t n = lambda.size();
  if (mu.size() != n || gamma.size() != n || phi.size() != n) throw std::invalid_argument("ambient length mismatch");
  std::map<Partition, long long> out;
  for (const auto& t : enumerate_tableaux(mu, gamma, phi.bounds())) {
    if (!is_lambda_dominant(t, lambda)) continue;
    auto wt = t.weight();
    std::vector<int> nu(n);
    for (std::size_t k = 0; k < n; ++k) nu[k] = lambda[k] + wt[k];
    ++out[Partition(std::move(nu))];  // dominance of the concatenation makes this a partition
  }
  return out;
}

long long coefficient_by_tableaux(const Partition& lambda, const Partition& mu, const Partition& gamma,
                                  const Partition& nu, const Flag& phi) {
  if (nu.size() != lambda.size()) throw std::invalid_argument("ambient length mismatch");
  auto table = coefficient_table_by_tableaux(lambda, mu, gamma, phi);
  auto it = table.find(nu);
  return it == table.end() ? 0 : it->second;
}

std::string crystal_dot(const WordSet& s, std::size_t n, const std::string& name) {
  static const char* colours[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& w : s) os << "  \"" << word_string(w) << "\";\n";
  for (const auto& w : s)
    for (int i = 1; i < static_cast<int>(n); ++i)
      if (auto f = lower(w, i, n); f && s.count(*f))
        os << "  \"" << word_string(w) << "\" -> \"" << word_string(*f) << "\" [label=\"" << i
           << "\", color=" << colours[(i - 1) % 8] << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace skewlr
