#include "skewlr/lattice.hpp"

#include <algorithm>
#include <limits>

namespace skewlr {

void LatticeProblem::fix(std::size_t node, long long value) {
  if (fixed_.at(node) && *fixed_[node] != value)
    throw std::invalid_argument("node " + std::to_string(node) + " fixed to two different values");
  fixed_[node] = value;
}

void LatticeProblem::bound(std::size_t node, long long lo, long long hi) {
  lo_.at(node) = lo_[node] ? std::max(*lo_[node], lo) : lo;
  hi_.at(node) = hi_[node] ? std::min(*hi_[node], hi) : hi;
}

void LatticeProblem::add(LinearForm form) {
  for (auto [node, c] : form.terms) {
    if (node >= size()) throw std::out_of_range("linear form refers to a missing node");
    if (c != 1 && c != -1) throw std::invalid_argument("linear form coefficients must be +-1");
  }
  forms_.push_back(std::move(form));
}

void LatticeProblem::add_rhombus(std::size_t a, std::size_t b, std::size_t c, std::size_t d, bool equality) {
  add(LinearForm{{{a, 1}, {b, 1}, {c, -1}, {d, -1}}, 0, equality});
}

std::size_t LatticeProblem::enumerate(const std::function<void(const std::vector<long long>&)>& visit,
                                      std::size_t max_visits) const {
  const std::size_t n = size();
  // Fixed nodes first, then free nodes by index.
  std::vector<std::size_t> order, position(n);
  for (std::size_t k = 0; k < n; ++k)
    if (fixed_[k]) order.push_back(k);
  for (std::size_t k = 0; k < n; ++k)
    if (!fixed_[k]) order.push_back(k);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;

  // Each form is attached to its latest node; that node must have a +-1 coefficient.
  std::vector<std::vector<std::pair<const LinearForm*, int>>> closing(n);
  for (const auto& f : forms_) {
    if (f.terms.empty()) {
      if (f.constant < 0 || (f.equality && f.constant != 0)) return 0;
      continue;
    }
    // Merge repeated nodes so the closing coefficient is well defined.
    std::size_t last = f.terms.front().first;
    for (auto [node, c] : f.terms)
      if (position[node] > position[last]) last = node;
    int coeff = 0;
    for (auto [node, c] : f.terms)
      if (node == last) coeff += c;
    if (coeff > 1 || coeff < -1) throw std::invalid_argument("node repeated with the same sign in a linear form");
    closing[position[last]].emplace_back(&f, coeff);
  }

  std::vector<long long> value(n, 0);
  std::size_t visits = 0, points = 0;
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      ++points;
      visit(value);
      return;
    }
    const std::size_t node = order[p];
    long long lo = -kInf, hi = kInf;
    if (fixed_[node]) lo = hi = *fixed_[node];
    if (lo_[node]) lo = std::max(lo, *lo_[node]);
    if (hi_[node]) hi = std::min(hi, *hi_[node]);
    for (const auto& [f, coeff] : closing[p]) {
      long long rest = f->constant;
      for (auto [m, c] : f->terms)
        if (m != node) rest += c * value[m];
      if (coeff == 0) {
        if (rest < 0 || (f->equality && rest != 0)) return;
        continue;
      }
      // coeff * x + rest >= 0 (or == 0), coeff = +-1.
      long long bound = coeff > 0 ? -rest : rest;
      if (f->equality) {
        lo = std::max(lo, bound);
        hi = std::min(hi, bound);
      } else if (coeff > 0) {
        lo = std::max(lo, bound);
      } else {
        hi = std::min(hi, bound);
      }
    }
    if (lo == -kInf || hi == kInf)
      throw std::logic_error("lattice node " + std::to_string(node) + " has an unbounded range");
    for (long long v = lo; v <= hi; ++v) {
      if (++visits > max_visits) throw ScaleExceeded(max_visits);
      value[node] = v;
      self(self, p + 1);
    }
  };
  rec(rec, 0);
  return points;
}

}  // namespace skewlr
