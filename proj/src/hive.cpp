#include "skewlr/hive.hpp"

#include <algorithm>
#include <sstream>

namespace skewlr {

std::string gt_violation(const SkewGTPattern& x) {
  const std::size_t m = x.height(), n = x.width();
  for (const auto& row : x.rows)
    if (row.size() != n) return "ragged pattern rows";
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x.rows[i][j] < x.rows[i - 1][j])
        return "NE(" + std::to_string(i) + "," + std::to_string(j + 1) + ") < 0";
      if (j + 1 < n && x.rows[i - 1][j] < x.rows[i][j + 1])
        return "SE(" + std::to_string(i) + "," + std::to_string(j + 1) + ") < 0";
    }
  return {};
}

SkewTableau upsilon(const SkewGTPattern& x) {
  const std::size_t n = x.width();
  if (x.height() != n) throw std::invalid_argument("upsilon needs an n x n pattern");
  if (auto v = gt_violation(x); !v.empty()) throw std::invalid_argument("not a GT pattern: " + v);
  std::vector<std::vector<int>> rows(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 1; i <= n; ++i)
      rows[r].insert(rows[r].end(), static_cast<std::size_t>(x.rows[i][r] - x.rows[i - 1][r]), static_cast<int>(i));
  return SkewTableau(SkewShape(Partition(x.rows[n]), Partition(x.rows[0])), std::move(rows));
}

SkewGTPattern upsilon_inverse(const SkewTableau& t) {
  const std::size_t n = t.ambient();
  if (t.max_letter() > static_cast<int>(n)) throw std::invalid_argument("tableau letter exceeds n");
  SkewGTPattern x;
  x.rows.assign(n + 1, std::vector<int>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = t.rows()[r];
    for (std::size_t i = 0; i <= n; ++i) {
      auto upto = std::upper_bound(row.begin(), row.end(), static_cast<int>(i)) - row.begin();
      x.rows[i][r] = t.shape().inner()[r] + static_cast<int>(upto);
    }
  }
  return x;
}

std::vector<SkewGTPattern> enumerate_flagged_gt_points(const Partition& mu, const Partition& gamma,
                                                       std::span<const int> row_bounds, std::size_t max_visits) {
  const std::size_t n = mu.size();
  if (gamma.size() != n || row_bounds.size() != n) throw std::invalid_argument("ambient length mismatch");
  if (!mu.contains(gamma)) return {};
  auto id = [n](std::size_t i, std::size_t j) { return i * n + j; };
  LatticeProblem lp((n + 1) * n);
  for (std::size_t j = 0; j < n; ++j) {
    lp.fix(id(0, j), gamma[j]);
    for (std::size_t i = 1; i <= n; ++i) {
      if (static_cast<int>(i) >= row_bounds[j]) lp.fix(id(i, j), mu[j]);
      lp.bound(id(i, j), gamma[j], mu[j]);
      lp.add(LinearForm{{{id(i, j), 1}, {id(i - 1, j), -1}}});
      if (j + 1 < n) lp.add(LinearForm{{{id(i - 1, j), 1}, {id(i, j + 1), -1}}});
    }
  }
  std::vector<SkewGTPattern> out;
  lp.enumerate(
      [&](const std::vector<long long>& v) {
        SkewGTPattern x;
        x.rows.assign(n + 1, std::vector<int>(n));
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = 0; j < n; ++j) x.rows[i][j] = static_cast<int>(v[id(i, j)]);
        out.push_back(std::move(x));
      },
      max_visits);
  return out;
}

// ---------------------------------------------------------------------------

void HiveBoundary::check() const {
  const std::size_t n = lambda.size();
  if (mu.size() != n || gamma.size() != n || nu.size() != n) throw std::invalid_argument("ambient length mismatch");
  if (lambda.weight() + mu.weight() != gamma.weight() + nu.weight())
    throw std::invalid_argument("weight mismatch: |lambda| + |mu| = " + std::to_string(lambda.weight() + mu.weight()) +
                                " but |gamma| + |nu| = " + std::to_string(gamma.weight() + nu.weight()));
}

std::string to_string(RhombusKind k) {
  switch (k) {
    case RhombusKind::ne: return "NE";
    case RhombusKind::se: return "SE";
    case RhombusKind::vertical: return "V";
  }
  return "?";
}

std::vector<std::pair<std::size_t, std::size_t>> flat_region(std::span<const int> bounds) {
  const std::size_t n = bounds.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = static_cast<std::size_t>(std::max(bounds[j - 1], 0)) + 1; i <= n; ++i) out.emplace_back(i, j);
  std::sort(out.begin(), out.end());
  return out;
}

SkewGTPattern partial_diff(const SkewHive& h) {
  const std::size_t n = h.n();
  SkewGTPattern x;
  x.rows.assign(n + 1, std::vector<int>(n));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) x.rows[i][j - 1] = static_cast<int>(h.h[i][j] - h.h[i][j - 1]);
  return x;
}

SkewHive hive_from_gt(const SkewGTPattern& x, const Partition& lambda) {
  const std::size_t n = x.width();
  if (x.height() != n || lambda.size() != n) throw std::invalid_argument("hive_from_gt needs an n x n pattern");
  const auto lam = partial_sums(lambda);
  SkewHive h;
  h.h.assign(n + 1, std::vector<long long>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    h.h[i][0] = lam[i];
    for (std::size_t j = 1; j <= n; ++j) h.h[i][j] = h.h[i][j - 1] + x.rows[i][j - 1];
  }
  return h;
}

SkewHiveCount enumerate_skew_hive_points(const HiveBoundary& b, const Flag& phi, bool keep, std::size_t max_visits) {
  b.check();
  const std::size_t n = b.n();
  if (phi.size() != n) throw std::invalid_argument("flag length must equal n");
  SkewHiveCount out;
  if (!b.mu.contains(b.gamma)) return out;

  const auto lam = partial_sums(b.lambda), mu = partial_sums(b.mu), gam = partial_sums(b.gamma),
             nu = partial_sums(b.nu);
  const int wl = b.lambda.weight(), wg = b.gamma.weight();
  auto id = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };
  LatticeProblem lp((n + 1) * (n + 1));
  for (std::size_t k = 0; k <= n; ++k) {
    lp.fix(id(k, 0), lam[k]);
    lp.fix(id(n, k), wl + mu[k]);
    lp.fix(id(0, k), gam[k]);
    lp.fix(id(k, n), wg + nu[k]);
  }
  // Row differences of a point form a pattern from gamma to mu.
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) lp.bound(id(i, j), lam[i] + gam[j], lam[i] + mu[j]);

  auto flat = flat_region(phi.bounds());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      bool eq = std::binary_search(flat.begin(), flat.end(), std::pair{i, j});
      lp.add_rhombus(id(i, j), id(i - 1, j - 1), id(i - 1, j), id(i, j - 1), eq);
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j + 1 <= n; ++j) lp.add_rhombus(id(i - 1, j), id(i, j), id(i - 1, j - 1), id(i, j + 1));
  for (std::size_t i = 1; i + 1 <= n; ++i)
    for (std::size_t k = 0; k + 1 <= n; ++k) lp.add_rhombus(id(i, k), id(i, k + 1), id(i - 1, k), id(i + 1, k + 1));

  out.points = lp.enumerate(
      [&](const std::vector<long long>& v) {
        if (!keep) return;
        SkewHive h;
        h.h.assign(n + 1, std::vector<long long>(n + 1));
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = 0; j <= n; ++j) h.h[i][j] = v[id(i, j)];
        out.hives.push_back(std::move(h));
      },
      max_visits);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

long long tri_ne(const Grid<long long>& h, std::size_t I, std::size_t j) {
  return h[I][j - 1] + h[I + 1][j] - h[I][j] - h[I + 1][j - 1];
}
long long tri_se(const Grid<long long>& h, std::size_t I, std::size_t j) {
  return h[I][j] + h[I + 1][j] - h[I][j - 1] - h[I + 1][j + 1];
}
long long tri_vert(const Grid<long long>& h, std::size_t I, std::size_t j) {
  return h[I][j] + h[I][j + 1] - h[I - 1][j] - h[I + 1][j + 1];
}

void check_tri_inputs(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  const std::size_t N = alpha.size();
  if (beta.size() != N || gamma.size() != N) throw std::invalid_argument("ambient length mismatch");
  if (alpha.weight() + beta.weight() != gamma.weight())
    throw std::invalid_argument("weight mismatch: |alpha| + |beta| != |gamma|");
}

bool on_kogan_face(std::optional<std::span<const int>> flag, std::size_t I, std::size_t j) {
  return flag && static_cast<int>(I) >= (*flag)[j - 1];
}

}  // namespace

std::string tri_hive_violation(const TriHive& t, const Partition& alpha, const Partition& beta, const Partition& gamma,
                               std::optional<std::span<const int>> flag) {
  check_tri_inputs(alpha, beta, gamma);
  const std::size_t N = alpha.size();
  if (flag && flag->size() != N) throw std::invalid_argument("flag length must equal N");
  if (t.h.size() != N + 1) return "wrong number of rows";
  for (std::size_t I = 0; I <= N; ++I)
    if (t.h[I].size() != I + 1) return "row " + std::to_string(I) + " has the wrong length";
  const auto a = partial_sums(alpha), b = partial_sums(beta), g = partial_sums(gamma);
  const auto& h = t.h;
  for (std::size_t k = 0; k <= N; ++k) {
    if (h[k][0] != a[k]) return "left boundary at row " + std::to_string(k);
    if (h[N][k] != alpha.weight() + b[k]) return "bottom boundary at " + std::to_string(k);
    if (h[k][k] != g[k]) return "right boundary at row " + std::to_string(k);
  }
  auto at = [](const char* kind, std::size_t I, std::size_t j) {
    return std::string(kind) + "(" + std::to_string(I) + "," + std::to_string(j) + ")";
  };
  for (std::size_t I = 1; I + 1 <= N; ++I)
    for (std::size_t j = 1; j <= I; ++j) {
      long long c = tri_ne(h, I, j);
      if (c < 0) return at("negative NE", I, j);
      if (c != 0 && on_kogan_face(flag, I, j)) return at("NE not flat", I, j);
    }
  for (std::size_t I = 1; I + 1 <= N; ++I)
    for (std::size_t j = 1; j <= I; ++j)
      if (tri_se(h, I, j) < 0) return at("negative SE", I, j);
  for (std::size_t I = 1; I + 1 <= N; ++I)
    for (std::size_t j = 0; j + 1 <= I; ++j)
      if (tri_vert(h, I, j) < 0) return at("negative V", I, j);
  return {};
}

TriHiveCount enumerate_tri_hive_points(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                       std::optional<std::span<const int>> flag, bool keep, std::size_t max_visits) {
  check_tri_inputs(alpha, beta, gamma);
  const std::size_t N = alpha.size();
  if (flag && flag->size() != N) throw std::invalid_argument("flag length must equal N");
  const auto a = partial_sums(alpha), b = partial_sums(beta), g = partial_sums(gamma);
  auto id = [](std::size_t I, std::size_t j) { return I * (I + 1) / 2 + j; };
  LatticeProblem lp(id(N, N) + 1);
  TriHiveCount out;
  try {
    for (std::size_t k = 0; k <= N; ++k) {
      lp.fix(id(k, 0), a[k]);
      lp.fix(id(N, k), alpha.weight() + b[k]);
      lp.fix(id(k, k), g[k]);
    }
  } catch (const std::invalid_argument&) {
    return out;  // corners disagree: the polytope is empty
  }
  for (std::size_t I = 1; I + 1 <= N; ++I)
    for (std::size_t j = 1; j <= I; ++j) {
      lp.add_rhombus(id(I, j - 1), id(I + 1, j), id(I, j), id(I + 1, j - 1), on_kogan_face(flag, I, j));
      lp.add_rhombus(id(I, j), id(I + 1, j), id(I, j - 1), id(I + 1, j + 1));
    }
  for (std::size_t I = 1; I + 1 <= N; ++I)
    for (std::size_t j = 0; j + 1 <= I; ++j) lp.add_rhombus(id(I, j), id(I, j + 1), id(I - 1, j), id(I + 1, j + 1));

  out.points = lp.enumerate(
      [&](const std::vector<long long>& v) {
        if (!keep) return;
        TriHive t;
        t.h.resize(N + 1);
        for (std::size_t I = 0; I <= N; ++I)
          for (std::size_t j = 0; j <= I; ++j) t.h[I].push_back(v[id(I, j)]);
        out.hives.push_back(std::move(t));
      },
      max_visits);
  return out;
}

// ---------------------------------------------------------------------------

LiftedData lift_tilde(const HiveBoundary& b, const Flag& phi) {
  b.check();
  const std::size_t n = b.n();
  if (phi.size() != n) throw std::invalid_argument("flag length must equal n");
  if (!b.mu.contains(b.gamma)) throw std::invalid_argument("gamma is not contained in mu");
  if (!b.nu.contains(b.lambda)) throw std::invalid_argument("lambda is not contained in nu");
  const int nu1 = n ? b.nu[0] : 0;
  std::vector<int> lam(n, nu1), mu = b.mu.parts(), nu, f;
  lam.insert(lam.end(), b.lambda.parts().begin(), b.lambda.parts().end());
  mu.resize(2 * n, 0);
  for (std::size_t k = 0; k < n; ++k) nu.push_back(nu1 + b.gamma[k]);
  for (std::size_t k = 0; k < n; ++k) nu.push_back(b.nu[k]);
  for (std::size_t k = 0; k < n; ++k) f.push_back(phi[k] + static_cast<int>(n));
  f.resize(2 * n, static_cast<int>(2 * n));
  return {Partition(std::move(lam)), Partition(std::move(mu)), Partition(std::move(nu)), Flag(std::move(f))};
}

TriHive psi(const SkewHive& h, const HiveBoundary& b) {
  const std::size_t n = b.n();
  if (h.n() != n) throw std::invalid_argument("hive size differs from boundary");
  if (auto r = validate_skew_hive(h.h, b); !r.valid()) throw std::invalid_argument("psi: invalid hive\n" + r.summary());
  const long long nu1 = n ? b.nu[0] : 0;
  const auto gam = partial_sums(b.gamma);
  TriHive t;
  t.h.resize(2 * n + 1);
  for (std::size_t I = 0; I <= 2 * n; ++I)
    for (std::size_t j = 0; j <= I; ++j)
      t.h[I].push_back(I < n ? static_cast<long long>(I) * nu1 + gam[j]
                             : static_cast<long long>(n) * nu1 + h.h[I - n][std::min(j, n)]);
  return t;
}

SkewHive psi_inverse(const TriHive& t, std::size_t n, int nu1) {
  if (t.size() != 2 * n) throw std::invalid_argument("psi_inverse: triangle must have 2n+1 rows");
  SkewHive h;
  h.h.assign(n + 1, std::vector<long long>(n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) h.h[i][j] = t.h[n + i][j] - static_cast<long long>(n) * nu1;
  return h;
}

// ---------------------------------------------------------------------------

namespace {

// Labels right-aligned in cells of even width; a half-cell indent per step.
std::string centred_rows(const Grid<long long>& g, const std::vector<std::size_t>& indent_halves) {
  std::size_t w = 2;
  for (const auto& row : g)
    for (long long v : row) w = std::max(w, std::to_string(v).size() + 1);
  w += w % 2;
  std::ostringstream os;
  for (std::size_t r = 0; r < g.size(); ++r) {
    std::string line(indent_halves[r] * (w / 2), ' ');
    for (long long v : g[r]) {
      auto s = std::to_string(v);
      line += std::string(w - s.size(), ' ') + s;
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const SkewHive& h) {
  std::vector<std::size_t> indent;
  for (std::size_t i = 0; i <= h.n(); ++i) indent.push_back(h.n() - i);
  return centred_rows(h.h, indent);
}

std::string render(const TriHive& t) {
  std::vector<std::size_t> indent;
  for (std::size_t I = 0; I <= t.size(); ++I) indent.push_back(t.size() - I);
  return centred_rows(t.h, indent);
}

std::string render(const SkewGTPattern& x) {
  Grid<long long> g;
  for (const auto& row : x.rows) g.emplace_back(row.begin(), row.end());
  std::vector<std::size_t> indent;
  for (std::size_t i = 0; i <= x.height(); ++i) indent.push_back(x.height() - i);
  return centred_rows(g, indent);
}

}  // namespace skewlr
