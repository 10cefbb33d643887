#include "skewlr/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "skewlr/tableau.hpp"

namespace skewlr {

IntPolynomial IntPolynomial::monomial(Exponent e, long long c) {
  IntPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t n, int i) {
  if (i < 1 || i > static_cast<int>(n)) throw std::out_of_range("variable index out of range");
  Exponent e(n, 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(std::move(e));
}

long long IntPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

int IntPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int a : e) s += a;
    d = std::max(d, s);
  }
  return d;
}

void IntPolynomial::add_term(const Exponent& e, long long c) {
  if (e.size() != n_) throw std::invalid_argument("exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(long long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("polynomial variable count mismatch");
  IntPolynomial out(a.n_);
  Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

IntPolynomial IntPolynomial::swap_vars(int i) const {
  if (i < 1 || i >= static_cast<int>(n_)) throw std::out_of_range("swap index out of range");
  IntPolynomial out(n_);
  for (const auto& [key, c] : terms_) {
    Exponent e = key;
    std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

bool IntPolynomial::is_symmetric() const {
  for (int i = 1; i < static_cast<int>(n_); ++i)
    if (swap_vars(i) != *this) return false;
  return true;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    os << a << " *";
    bool constant = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      constant = false;
      os << " x" << k + 1;
      if (e[k] > 1) os << "^" << e[k];
    }
    if (constant) os << " 1";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

IntPolynomial demazure_Ti(const IntPolynomial& f, int i) {
  const std::size_t n = f.nvars();
  if (i < 1 || i >= static_cast<int>(n))
    throw std::out_of_range("Demazure index " + std::to_string(i) + " out of range for n = " +
                            std::to_string(n));
  const auto p = static_cast<std::size_t>(i - 1), q = p + 1;
  IntPolynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    const int a = e[p], b = e[q];
    Exponent m = e;
    if (a >= b) {
      for (int k = 0; k <= a - b; ++k) {
        m[p] = a - k;
        m[q] = b + k;
        out.add_term(m, c);
      }
    } else {
      for (int k = 1; k < b - a; ++k) {
        m[p] = a + k;
        m[q] = b - k;
        out.add_term(m, -c);
      }
    }
  }
  return out;
}

IntPolynomial demazure_word(const IntPolynomial& f, std::span<const int> word) {
  IntPolynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure_Ti(g, *it);
  return g;
}

IntPolynomial demazure_Tw(const IntPolynomial& f, const Permutation& w) {
  if (w.size() != f.nvars()) throw std::invalid_argument("permutation size differs from variable count");
  return demazure_word(f, reduced_word(w));
}

IntPolynomial key_polynomial(const Composition& alpha) {
  auto [dagger, omega] = sort_to_partition(alpha);
  return demazure_Tw(IntPolynomial::monomial(dagger.parts()), omega);
}

namespace {

// Schur polynomials are requested repeatedly by the greedy expansion.
std::mutex schur_mutex;
std::map<Partition, IntPolynomial>& schur_cache() {
  static std::map<Partition, IntPolynomial> cache;
  return cache;
}

}  // namespace

IntPolynomial schur(const Partition& lambda) {
  {
    std::lock_guard lock(schur_mutex);
    auto it = schur_cache().find(lambda);
    if (it != schur_cache().end()) return it->second;
  }
  std::vector<int> bounds(lambda.size(), static_cast<int>(lambda.size()));
  auto s = flagged_skew_schur(lambda, Partition::zero(lambda.size()), bounds);
  std::lock_guard lock(schur_mutex);
  schur_cache().emplace(lambda, s);
  return s;
}

IntPolynomial flagged_skew_schur(const Partition& mu, const Partition& gamma,
                                 std::span<const int> row_bounds) {
  IntPolynomial out(mu.size());
  for (const auto& t : enumerate_tableaux(mu, gamma, row_bounds)) out.add_term(t.weight().parts(), 1);
  return out;
}

std::map<Partition, long long> expand_in_schur(const IntPolynomial& f) {
  if (!f.is_symmetric()) throw std::domain_error("expand_in_schur: polynomial is not symmetric");
  std::map<Partition, long long> out;
  IntPolynomial rest = f;
  // Each step removes the lex-greatest monomial, which only lowers the leading term.
  for (std::size_t step = 0; !rest.is_zero(); ++step) {
    if (step > 1000000) throw std::logic_error("expand_in_schur did not terminate");
    const auto& [e, c] = *rest.terms().rbegin();
    if (!std::is_sorted(e.rbegin(), e.rend()))
      throw std::logic_error("expand_in_schur: leading exponent is not a partition");
    Partition lam(e);
    long long coeff = c;
    out[lam] += coeff;
    rest -= schur(lam) * coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool key_order_less(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::map<Composition, long long> expand_in_key(const IntPolynomial& f) {
  std::map<Composition, long long> out;
  IntPolynomial rest = f;
  std::map<Composition, IntPolynomial> keys;
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    if (++steps > 1000000) throw std::logic_error("expand_in_key did not terminate");
    auto top = std::max_element(rest.terms().begin(), rest.terms().end(),
                                [](const auto& x, const auto& y) { return key_order_less(x.first, y.first); });
    Composition alpha(top->first);
    long long c = top->second;
    auto it = keys.find(alpha);
    if (it == keys.end()) it = keys.emplace(alpha, key_polynomial(alpha)).first;
    if (it->second.coefficient(alpha.parts()) != 1)
      throw std::logic_error("key polynomial lacks its extreme monomial");
    out[alpha] += c;
    rest -= it->second * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<Partition, long long> coefficient_table_by_demazure(const Partition& lambda, const Partition& mu,
                                                             const Partition& gamma, const Flag& phi) {
  const std::size_t n = lambda.size();
  if (mu.size() != n || gamma.size() != n || phi.size() != n)
    throw std::invalid_argument("ambient length mismatch");
  auto f = IntPolynomial::monomial(lambda.parts()) * flagged_skew_schur(mu, gamma, phi.bounds());
  return expand_in_schur(demazure_Tw(f, Permutation::longest(n)));
}

long long coefficient_by_demazure(const Partition& lambda, const Partition& mu, const Partition& gamma,
                                  const Partition& nu, const Flag& phi) {
  if (nu.size() != lambda.size()) throw std::invalid_argument("ambient length mismatch");
  auto table = coefficient_table_by_demazure(lambda, mu, gamma, phi);
  auto it = table.find(nu);
  return it == table.end() ? 0 : it->second;
}

}  // namespace skewlr
