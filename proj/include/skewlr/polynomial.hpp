#pragma once

// Integer polynomials in x_1..x_n, Demazure operators, key and Schur
// polynomials, flagged skew Schur polynomials and the basis expansions.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "skewlr/combinatorics.hpp"

namespace skewlr {

using Exponent = std::vector<int>;

class IntPolynomial {
 public:
  using Terms = std::map<Exponent, long long>;

  IntPolynomial() = default;
  explicit IntPolynomial(std::size_t n) : n_(n) {}
  static IntPolynomial monomial(Exponent e, long long c = 1);
  static IntPolynomial one(std::size_t n) { return monomial(Exponent(n, 0)); }
  static IntPolynomial variable(std::size_t n, int i);  // x_i, 1-based

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const Exponent& e) const;
  int degree() const;  // -1 for zero

  void add_term(const Exponent& e, long long c);
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(long long c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, long long c) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  /// f(..., x_{i+1}, x_i, ...), 1 <= i < n.
  IntPolynomial swap_vars(int i) const;
  /// Invariant under every adjacent transposition.
  bool is_symmetric() const;

  /// "c * x1^a1 x2^a2 + ...", terms in descending exponent order; "0" if zero.
  std::string to_string() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// Isobaric divided difference T_i, by its monomial closed form.
IntPolynomial demazure_Ti(const IntPolynomial& f, int i);
/// T_w = T_{i_1} ... T_{i_k} along reduced_word(w); the rightmost acts first.
IntPolynomial demazure_Tw(const IntPolynomial& f, const Permutation& w);
/// Same, along an explicit word (not necessarily reduced).
IntPolynomial demazure_word(const IntPolynomial& f, std::span<const int> word);

IntPolynomial key_polynomial(const Composition& alpha);
IntPolynomial schur(const Partition& lambda);
/// Sum of x^wt(T) over tableaux of mu/gamma with row bounds; zero if gamma is not inside mu.
IntPolynomial flagged_skew_schur(const Partition& mu, const Partition& gamma,
                                 std::span<const int> row_bounds);

/// Greedy Schur expansion of a symmetric polynomial. Throws std::domain_error
/// if f is not symmetric.
std::map<Partition, long long> expand_in_schur(const IntPolynomial& f);

/// Key order: exponents compared from the last variable backwards.
bool key_order_less(const Exponent& a, const Exponent& b);
/// Greedy key expansion; multiplicities may be negative for non key-positive input.
std::map<Composition, long long> expand_in_key(const IntPolynomial& f);

/// Full table nu -> c for fixed (lambda, mu, gamma, Phi) via T_{w0}(x^lambda s_{mu/gamma}(X_Phi)).
std::map<Partition, long long> coefficient_table_by_demazure(const Partition& lambda, const Partition& mu,
                                                             const Partition& gamma, const Flag& phi);
long long coefficient_by_demazure(const Partition& lambda, const Partition& mu, const Partition& gamma,
                                  const Partition& nu, const Flag& phi);

}  // namespace skewlr
