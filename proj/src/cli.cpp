#include "skewlr/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "skewlr/burge.hpp"
#include "skewlr/polynomial.hpp"

namespace skewlr {

json to_json(const Partition& p) { return p.parts(); }
json to_json(const Composition& c) { return c.parts(); }
json to_json(const Flag& f) { return f.bounds(); }

json to_json(const HiveBoundary& b) {
  return {{"lambda", to_json(b.lambda)}, {"mu", to_json(b.mu)}, {"gamma", to_json(b.gamma)}, {"nu", to_json(b.nu)}};
}

json to_json(const Grid<long long>& g) { return g; }

json to_json(const SkewTableau& t) {
  return {{"outer", to_json(t.shape().outer())}, {"inner", to_json(t.shape().inner())}, {"rows", t.rows()}};
}

Method parse_method(const std::string& s) {
  if (s == "tableau") return Method::tableau;
  if (s == "hive") return Method::hive;
  if (s == "demazure") return Method::demazure;
  if (s == "all") return Method::all;
  throw std::invalid_argument("unknown method '" + s + "' (tableau, hive, demazure, all)");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::tableau: return "tableau";
    case Method::hive: return "hive";
    case Method::demazure: return "demazure";
    case Method::all: return "all";
  }
  return "?";
}

namespace {

std::string str(const Partition& p) { return "(" + join_ints(p.parts()) + ")"; }
std::string str(const Flag& f) { return "(" + join_ints(f.bounds()) + ")"; }

std::string str(const HiveBoundary& b) {
  return "lambda=" + str(b.lambda) + " mu=" + str(b.mu) + " gamma=" + str(b.gamma) + " nu=" + str(b.nu);
}

bool balanced(const HiveBoundary& b) {
  return b.lambda.weight() + b.mu.weight() == b.gamma.weight() + b.nu.weight();
}

std::vector<Method> methods_of(Method m) {
  if (m == Method::all) return {Method::tableau, Method::hive, Method::demazure};
  return {m};
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

// ---------------------------------------------------------------------------

long long coefficient_via_tableaux(const HiveBoundary& b, const Flag& phi) {
  return coefficient_by_tableaux(b.lambda, b.mu, b.gamma, b.nu, phi);
}

long long coefficient_via_hives(const HiveBoundary& b, const Flag& phi, std::size_t limit) {
  if (!b.mu.contains(b.gamma) || !balanced(b)) return 0;
  return static_cast<long long>(enumerate_skew_hive_points(b, phi, false, limit).points);
}

long long coefficient_via_demazure(const HiveBoundary& b, const Flag& phi) {
  return coefficient_by_demazure(b.lambda, b.mu, b.gamma, b.nu, phi);
}

void CoefficientQuery::check() const {
  const std::size_t n = lambda.size();
  if (mu.size() != n || gamma.size() != n || phi.size() != n || (nu && nu->size() != n))
    throw std::invalid_argument("ambient mismatch: lambda, mu, gamma, nu and Phi must all have length " +
                                std::to_string(n));
}

CoefficientReport run_coefficient(const CoefficientQuery& q) {
  q.check();
  CoefficientReport r{q, {}, {}, {}};
  const auto methods = methods_of(q.method);
  if (q.nu) {
    HiveBoundary b{q.lambda, q.mu, q.gamma, *q.nu};
    for (Method m : methods) {
      long long v = m == Method::tableau ? coefficient_via_tableaux(b, q.phi)
                    : m == Method::hive  ? coefficient_via_hives(b, q.phi, q.limit)
                                         : coefficient_via_demazure(b, q.phi);
      r.values[to_string(m)] = v;
    }
    for (const auto& [name, v] : r.values)
      if (v != r.values.begin()->second)
        r.divergences.push_back(r.values.begin()->first + " = " + std::to_string(r.values.begin()->second) + " but " +
                                name + " = " + std::to_string(v));
    return r;
  }
  const int size = q.lambda.weight() + q.mu.weight() - q.gamma.weight();
  for (Method m : methods) {
    std::map<Partition, long long> table;
    if (m == Method::tableau) {
      table = coefficient_table_by_tableaux(q.lambda, q.mu, q.gamma, q.phi);
    } else if (m == Method::demazure) {
      table = coefficient_table_by_demazure(q.lambda, q.mu, q.gamma, q.phi);
    } else if (size >= 0) {
      for (const auto& nu : partitions_of(size, q.lambda.size()))
        if (long long c = coefficient_via_hives({q.lambda, q.mu, q.gamma, nu}, q.phi, q.limit)) table[nu] = c;
    }
    std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
    r.tables[to_string(m)] = std::move(table);
  }
  const auto& [first_name, first] = *r.tables.begin();
  for (const auto& [name, t] : r.tables) {
    std::set<Partition> keys;
    for (const auto& kv : first) keys.insert(kv.first);
    for (const auto& kv : t) keys.insert(kv.first);
    for (const auto& nu : keys) {
      long long a = first.count(nu) ? first.at(nu) : 0, c = t.count(nu) ? t.at(nu) : 0;
      if (a != c)
        r.divergences.push_back("nu=" + str(nu) + ": " + first_name + " = " + std::to_string(a) + " but " + name +
                                " = " + std::to_string(c));
    }
  }
  return r;
}

json CoefficientReport::to_json() const {
  json j;
  j["lambda"] = skewlr::to_json(query.lambda);
  j["mu"] = skewlr::to_json(query.mu);
  j["gamma"] = skewlr::to_json(query.gamma);
  if (query.nu) j["nu"] = skewlr::to_json(*query.nu);
  j["phi"] = skewlr::to_json(query.phi);
  j["method"] = to_string(query.method);
  if (query.nu) {
    j["values"] = values;
    if (agree()) j["value"] = values.begin()->second;
  } else {
    json t = json::object();
    for (const auto& [name, table] : tables) {
      json rows = json::array();
      for (const auto& [nu, c] : table) rows.push_back({{"nu", skewlr::to_json(nu)}, {"c", c}});
      t[name] = rows;
    }
    j["tables"] = t;
  }
  j["agree"] = agree();
  j["divergences"] = divergences;
  return j;
}

std::string CoefficientReport::to_text() const {
  std::ostringstream os;
  if (query.nu) {
    for (const auto& [name, v] : values) os << name << ": " << v << "\n";
  } else {
    for (const auto& [name, table] : tables) {
      os << name << ":\n";
      if (table.empty()) os << "  (all zero)\n";
      for (const auto& [nu, c] : table) os << "  nu=" << str(nu) << "  " << c << "\n";
    }
  }
  for (const auto& d : divergences) os << "DIVERGENCE: " << d << "\n";
  if (values.size() > 1 || tables.size() > 1) os << (agree() ? "methods agree\n" : "methods DISAGREE\n");
  return os.str();
}

// ---------------------------------------------------------------------------

SaturationReport saturation_scan(const HiveBoundary& b, const Flag& phi, int k_max, std::size_t limit) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  b.check();
  SaturationReport r{b, phi, {}, {}};
  for (int k = 1; k <= k_max; ++k) r.values.push_back(coefficient_via_hives(b.scaled(k), phi, limit));
  const bool c1 = r.values[0] > 0;
  const bool some = std::any_of(r.values.begin(), r.values.end(), [](long long v) { return v > 0; });
  if (some && !c1) r.findings.push_back("saturation fails: c_k > 0 for some k but c_1 = 0");
  if (c1)
    for (int k = 1; k <= k_max; ++k)
      if (r.values[static_cast<std::size_t>(k - 1)] == 0)
        r.findings.push_back("dilation fails: c_1 > 0 but c_" + std::to_string(k) + " = 0");
  return r;
}

json SaturationReport::to_json() const {
  json j = skewlr::to_json(boundary);
  j["phi"] = skewlr::to_json(phi);
  j["values"] = values;
  j["pass"] = pass();
  j["findings"] = findings;
  return j;
}

std::string SaturationReport::to_text() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < values.size(); ++k) os << "k=" << k + 1 << "  c=" << values[k] << "\n";
  for (const auto& f : findings) os << "FINDING: " << f << "\n";
  os << (pass() ? "saturation and dilation hold\n" : "counterexample found\n");
  return os.str();
}

// ---------------------------------------------------------------------------

bool anchor_hive_valid() {
  const Grid<long long> h = {
      {0, 2, 3, 3, 3}, {3, 7, 9, 10, 10}, {4, 9, 13, 14, 14}, {5, 10, 14, 16, 16}, {5, 10, 14, 16, 17}};
  HiveBoundary b{Partition({3, 1, 1, 0}), Partition({5, 4, 2, 1}), Partition({2, 1, 0, 0}), Partition({7, 4, 2, 1})};
  const std::vector<int> phi{2, 2, 3, 4};
  return validate_skew_hive(h, b, std::span<const int>(phi)).valid();
}

json TupleOutcome::to_json() const {
  json j = skewlr::to_json(boundary);
  j["phi"] = skewlr::to_json(phi);
  j["tableau"] = tableau;
  j["hive"] = hive;
  j["demazure"] = demazure;
  if (lifted) j["lifted"] = *lifted;
  if (!dilations.empty()) j["dilations"] = dilations;
  j["pass"] = failure.empty();
  if (!failure.empty()) j["failure"] = failure;
  return j;
}

namespace {

struct Unit {
  Partition lambda, mu, gamma;
  Flag phi;
};

struct UnitResult {
  std::vector<TupleOutcome> outcomes;
  std::size_t lifted = 0, round_trips = 0, saturation = 0;
  bool failed = false;
};

UnitResult run_unit(const Unit& u, const GridSpec& spec) {
  UnitResult res;
  const auto tab = coefficient_table_by_tableaux(u.lambda, u.mu, u.gamma, u.phi);
  const auto dem = coefficient_table_by_demazure(u.lambda, u.mu, u.gamma, u.phi);
  auto lookup = [](const std::map<Partition, long long>& m, const Partition& nu) {
    auto it = m.find(nu);
    return it == m.end() ? 0LL : it->second;
  };
  const int size = u.lambda.weight() + u.mu.weight() - u.gamma.weight();
  for (const auto& nu : partitions_of(size, spec.n)) {
    TupleOutcome o{{u.lambda, u.mu, u.gamma, nu}, u.phi, 0, 0, 0, std::nullopt, {}, {}};
    try {
      o.tableau = lookup(tab, nu);
      o.demazure = lookup(dem, nu);
      auto hives = enumerate_skew_hive_points(o.boundary, u.phi, spec.lift, spec.limit);
      o.hive = static_cast<long long>(hives.points);
      if (o.tableau != o.hive || o.hive != o.demazure) {
        o.failure = "three-way disagreement: tableau " + std::to_string(o.tableau) + ", hive " +
                    std::to_string(o.hive) + ", demazure " + std::to_string(o.demazure);
      } else if (spec.lift) {
        if (nu.contains(u.lambda)) {
          auto iso = hive_iso(o.boundary, u.phi, spec.limit);
          o.lifted = static_cast<long long>(iso.triangular);
          ++res.lifted;
          res.round_trips += iso.round_trips;
          if (!iso.pass()) o.failure = iso.findings.front();
        } else if (o.hive != 0) {
          o.failure = "nonzero count although lambda is not inside nu";
        }
      }
      if (o.failure.empty() && spec.saturation_k > 0) {
        auto sat = saturation_scan(o.boundary, u.phi, spec.saturation_k, spec.limit);
        o.dilations = sat.values;
        ++res.saturation;
        if (!sat.pass()) o.failure = sat.findings.front();
      }
    } catch (const std::exception& e) {
      o.failure = e.what();
    }
    const bool bad = !o.failure.empty();
    res.outcomes.push_back(std::move(o));
    if (bad) {
      res.failed = true;
      break;
    }
  }
  return res;
}

template <class Job>
void run_pool(std::size_t count, unsigned threads, const Job& job, std::atomic<bool>& stop) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count && !stop; k = next++) job(k);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

}  // namespace

CrossCheckSummary cross_check(const GridSpec& spec, const std::function<bool()>& anchor) {
  const auto t0 = std::chrono::steady_clock::now();
  CrossCheckSummary s;
  s.spec = spec;
  s.anchor_ok = anchor();
  if (!s.anchor_ok) {
    s.seconds = since(t0);
    return s;
  }
  const auto flags = spec.flags.empty() ? all_flags(spec.n) : spec.flags;
  for (const auto& f : flags)
    if (f.size() != spec.n) throw std::invalid_argument("flag length differs from n");
  const int max_lambda = spec.max_lambda.value_or(spec.max_mu);

  std::vector<Unit> units;
  for (const auto& mu : partitions_up_to(spec.max_mu, spec.n))
    for (const auto& gamma : partitions_inside(mu))
      for (const auto& lambda : partitions_up_to(max_lambda, spec.n))
        for (const auto& phi : flags) units.push_back({lambda, mu, gamma, phi});

  std::vector<UnitResult> results(units.size());
  std::vector<char> done(units.size(), 0);
  std::atomic<bool> stop{false};
  run_pool(units.size(), spec.threads, [&](std::size_t k) {
    results[k] = run_unit(units[k], spec);
    done[k] = 1;
    if (results[k].failed) stop = true;
  }, stop);

  for (std::size_t k = 0; k < units.size() && done[k]; ++k) {
    auto& r = results[k];
    s.lifted_checks += r.lifted;
    s.psi_round_trips += r.round_trips;
    s.saturation_scans += r.saturation;
    for (auto& o : r.outcomes) {
      ++s.tuples;
      if (!o.failure.empty()) {
        ++s.failures;
        s.first_failure = o;
      }
      s.outcomes.push_back(std::move(o));
    }
    if (r.failed) break;
  }

  if (spec.decomposition && s.failures == 0) {
    for (const auto& mu : partitions_up_to(spec.max_mu, spec.n))
      for (const auto& gamma : partitions_inside(mu))
        for (const auto& phi : flags) {
          ++s.decompositions;
          try {
            auto d = decomposition_report(mu, gamma, phi.bounds());
            if (!d.pass()) {
              ++s.decomposition_failures;
              s.decomposition_messages.push_back("mu=" + str(mu) + " gamma=" + str(gamma) + " phi=" + str(phi) +
                                                 ": " + d.to_text());
            }
          } catch (const std::exception& e) {
            ++s.decomposition_failures;
            s.decomposition_messages.push_back("mu=" + str(mu) + " gamma=" + str(gamma) + " phi=" + str(phi) + ": " +
                                               e.what());
          }
        }
  }
  s.seconds = since(t0);
  return s;
}

json CrossCheckSummary::to_json(bool matrix) const {
  json j;
  j["n"] = spec.n;
  j["max_mu"] = spec.max_mu;
  j["max_lambda"] = spec.max_lambda.value_or(spec.max_mu);
  j["anchor_ok"] = anchor_ok;
  j["tuples"] = tuples;
  j["failures"] = failures;
  j["lifted_checks"] = lifted_checks;
  j["psi_round_trips"] = psi_round_trips;
  j["decompositions"] = decompositions;
  j["decomposition_failures"] = decomposition_failures;
  j["decomposition_messages"] = decomposition_messages;
  j["saturation_scans"] = saturation_scans;
  if (first_failure) j["first_failure"] = first_failure->to_json();
  if (matrix) {
    json m = json::array();
    for (const auto& o : outcomes) m.push_back(o.to_json());
    j["matrix"] = m;
  }
  j["seconds"] = seconds;
  j["pass"] = pass();
  return j;
}

std::string CrossCheckSummary::to_text() const {
  std::ostringstream os;
  os << "grid: n=" << spec.n << " |mu|<=" << spec.max_mu << " |lambda|<=" << spec.max_lambda.value_or(spec.max_mu)
     << "\n";
  os << "anchor hive: " << (anchor_ok ? "ok" : "FAILED") << "\n";
  os << "tuples: " << tuples << "  failures: " << failures << "\n";
  if (spec.lift) os << "lifted comparisons: " << lifted_checks << "  psi round trips: " << psi_round_trips << "\n";
  if (spec.decomposition)
    os << "decompositions: " << decompositions << "  failures: " << decomposition_failures << "\n";
  if (spec.saturation_k > 0) os << "saturation scans (k<=" << spec.saturation_k << "): " << saturation_scans << "\n";
  if (first_failure)
    os << "first failure: " << str(first_failure->boundary) << " phi=" << str(first_failure->phi) << "\n  "
       << first_failure->failure << "\n  reproduce: " << first_failure->to_json().dump() << "\n";
  for (const auto& m : decomposition_messages) os << "decomposition failure: " << m << "\n";
  os << "time: " << seconds << " s\n" << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

DecompositionReport decomposition_report(const Partition& mu, const Partition& gamma, const std::vector<int>& bounds) {
  const std::size_t n = mu.size();
  if (gamma.size() != n || bounds.size() != n) throw std::invalid_argument("ambient mismatch");
  DecompositionReport r;
  r.mu = mu;
  r.gamma = gamma;
  r.bounds = bounds;
  auto tabs = enumerate_tableaux(mu, gamma, bounds);
  auto words = reading_words(tabs);
  r.witness = string_property_violation(words, n);
  if (r.witness) return r;
  r.components = decompose(words, n);
  IntPolynomial sum(n);
  for (const auto& c : r.components) sum = sum + key_polynomial(c.key_weight);
  r.character_matches = sum == flagged_skew_schur(mu, gamma, bounds);
  auto fc = validate_flag(bounds, n);
  r.is_flag = static_cast<bool>(fc);
  if (r.is_flag && mu.contains(gamma)) {
    auto classes = class_decomposition(mu, gamma, *fc.flag);
    std::map<WordSet, Partition> comps;
    for (const auto& c : r.components) comps.emplace(c.members, sort_to_partition(c.key_weight).first);
    r.classes_match = classes.size() == comps.size();
    for (const auto& cls : classes) {
      auto it = comps.find(reading_words(cls.members));
      if (it == comps.end() || sort_to_partition(cls.beta).first != it->second) r.classes_match = false;
    }
  } else if (r.is_flag) {
    r.classes_match = r.components.empty();
  }
  return r;
}

json DecompositionReport::to_json() const {
  json j;
  j["mu"] = skewlr::to_json(mu);
  j["gamma"] = skewlr::to_json(gamma);
  j["bounds"] = bounds;
  j["string_property"] = !witness;
  if (witness) {
    j["witness"] = {{"word", word_string(witness->x)},
                    {"i", witness->i},
                    {"operator", witness->failing == Direction::raise ? "e" : "f"},
                    {"image", word_string(witness->image)},
                    {"description", witness->describe()}};
  }
  json comps = json::array();
  for (const auto& c : components)
    comps.push_back({{"head", word_string(c.head)},
                     {"size", c.members.size()},
                     {"highest_weight", skewlr::to_json(c.highest_weight)},
                     {"key_weight", skewlr::to_json(c.key_weight)}});
  j["components"] = comps;
  j["character_matches"] = character_matches;
  if (is_flag) j["classes_match"] = classes_match;
  j["pass"] = pass();
  return j;
}

std::string DecompositionReport::to_text() const {
  std::ostringstream os;
  if (witness) {
    os << "string property FAILS: " << witness->describe() << "\n";
    return os.str();
  }
  os << components.size() << " Demazure component(s)\n";
  for (const auto& c : components)
    os << "  head " << word_string(c.head) << "  size " << c.members.size() << "  highest weight "
       << str(c.highest_weight) << "  key weight (" << join_ints(c.key_weight.parts()) << ")\n";
  os << "character sum equals the flagged skew Schur polynomial: " << (character_matches ? "yes" : "NO") << "\n";
  if (is_flag) os << "recording-tableau classes coincide with components: " << (classes_match ? "yes" : "NO") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

HiveIsoReport hive_iso(const HiveBoundary& b, const Flag& phi, std::size_t limit) {
  b.check();
  HiveIsoReport r{b, phi, std::nullopt, 0, 0, 0, {}};
  if (!b.mu.contains(b.gamma)) {
    r.findings.push_back("gamma is not inside mu");
    return r;
  }
  auto skew = enumerate_skew_hive_points(b, phi, true, limit);
  r.skew = skew.points;
  if (!b.nu.contains(b.lambda)) {
    if (r.skew) r.findings.push_back("skew hives exist although lambda is not inside nu");
    return r;
  }
  r.lifted = lift_tilde(b, phi);
  const auto& lt = *r.lifted;
  auto tri = enumerate_tri_hive_points(lt.lambda, lt.mu, lt.nu, std::span<const int>(lt.phi.bounds()), true, limit);
  r.triangular = tri.points;
  if (r.skew != r.triangular)
    r.findings.push_back("count mismatch: " + std::to_string(r.skew) + " skew hives, " + std::to_string(r.triangular) +
                         " triangular hives on the Kogan face");
  std::set<Grid<long long>> images;
  for (const auto& h : skew.hives) {
    auto t = psi(h, b);
    if (auto v = tri_hive_violation(t, lt.lambda, lt.mu, lt.nu, std::span<const int>(lt.phi.bounds())); !v.empty())
      r.findings.push_back("psi image is not on the Kogan face: " + v);
    if (psi_inverse(t, b.n(), b.nu[0]) == h) ++r.round_trips;
    else r.findings.push_back("psi inverse does not recover the skew hive");
    images.insert(t.h);
  }
  std::set<Grid<long long>> targets;
  for (const auto& t : tri.hives) targets.insert(t.h);
  if (r.skew == r.triangular && images != targets) r.findings.push_back("psi is not onto the triangular hives");
  return r;
}

json HiveIsoReport::to_json() const {
  json j = skewlr::to_json(boundary);
  j["phi"] = skewlr::to_json(phi);
  if (lifted)
    j["lifted"] = {{"lambda", skewlr::to_json(lifted->lambda)},
                   {"mu", skewlr::to_json(lifted->mu)},
                   {"nu", skewlr::to_json(lifted->nu)},
                   {"phi", skewlr::to_json(lifted->phi)}};
  j["skew_hives"] = skew;
  j["triangular_hives"] = triangular;
  j["round_trips"] = round_trips;
  j["findings"] = findings;
  j["pass"] = pass();
  return j;
}

std::string HiveIsoReport::to_text() const {
  std::ostringstream os;
  if (lifted)
    os << "lifted: lambda=" << str(lifted->lambda) << " mu=" << str(lifted->mu) << " nu=" << str(lifted->nu)
       << " phi=" << str(lifted->phi) << "\n";
  os << "skew hives: " << skew << "\ntriangular hives on the Kogan face: " << triangular
     << "\npsi round trips: " << round_trips << "\n";
  for (const auto& f : findings) os << "FINDING: " << f << "\n";
  os << (pass() ? "isomorphism verified\n" : "isomorphism check FAILED\n");
  return os.str();
}

}  // namespace skewlr
