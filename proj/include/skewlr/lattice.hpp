#pragma once

// Backtracking enumeration of the integer points of a polytope cut out by
// linear forms with +-1 coefficients. Free nodes are assigned in index order
// after every fixed node; each constraint is checked, and used to narrow the
// range, at the node that closes it.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewlr {

class ScaleExceeded : public std::runtime_error {
 public:
  explicit ScaleExceeded(std::size_t limit)
      : std::runtime_error("scale exceeded: more than " + std::to_string(limit) + " nodes visited"), limit(limit) {}
  std::size_t limit;
};

struct LinearForm {
  std::vector<std::pair<std::size_t, int>> terms;  // (node, +-1)
  long long constant = 0;
  bool equality = false;  // form == 0 instead of form >= 0
};

class LatticeProblem {
 public:
  explicit LatticeProblem(std::size_t nodes) : fixed_(nodes), lo_(nodes), hi_(nodes) {}

  std::size_t size() const { return fixed_.size(); }
  void fix(std::size_t node, long long value);
  /// Optional static range; narrowed further by closing constraints.
  void bound(std::size_t node, long long lo, long long hi);
  void add(LinearForm form);
  /// sum(terms) >= 0 over four nodes, the common rhombus shape: a + b - c - d.
  void add_rhombus(std::size_t a, std::size_t b, std::size_t c, std::size_t d, bool equality = false);

  /// Calls visit for every integer point; returns the number of points.
  /// Throws ScaleExceeded after max_visits node assignments.
  std::size_t enumerate(const std::function<void(const std::vector<long long>&)>& visit,
                        std::size_t max_visits = 1000000) const;

 private:
  std::vector<std::optional<long long>> fixed_;
  std::vector<std::optional<long long>> lo_, hi_;
  std::vector<LinearForm> forms_;
};

}  // namespace skewlr
