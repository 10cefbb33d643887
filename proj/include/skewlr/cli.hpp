#pragma once

// Report layer shared by the command-line tool and the acceptance runner:
// coefficient queries over the three routes, saturation scans, the grid
// cross-check harness and decomposition / hive reports. Every report has a
// JSON mirror.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewlr/combinatorics.hpp"
#include "skewlr/crystal.hpp"
#include "skewlr/hive.hpp"

namespace skewlr {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const Composition& c);
json to_json(const Flag& f);
json to_json(const HiveBoundary& b);
json to_json(const Grid<long long>& g);
json to_json(const SkewTableau& t);

enum class Method { tableau, hive, demazure, all };
Method parse_method(const std::string& s);
std::string to_string(Method m);

// ---------------------------------------------------------------------------
// Single coefficients and tables

long long coefficient_via_tableaux(const HiveBoundary& b, const Flag& phi);
long long coefficient_via_hives(const HiveBoundary& b, const Flag& phi, std::size_t limit);
long long coefficient_via_demazure(const HiveBoundary& b, const Flag& phi);

struct CoefficientQuery {
  Partition lambda, mu, gamma;
  std::optional<Partition> nu;  // absent: full table over nu
  Flag phi;
  Method method = Method::all;
  std::size_t limit = 1000000;
  /// Throws std::invalid_argument on ambient mismatch.
  void check() const;
};

struct CoefficientReport {
  CoefficientQuery query;
  std::map<std::string, long long> values;                          // nu given
  std::map<std::string, std::map<Partition, long long>> tables;     // nu absent; nonzero entries
  std::vector<std::string> divergences;
  bool agree() const { return divergences.empty(); }
  json to_json() const;
  std::string to_text() const;
};

CoefficientReport run_coefficient(const CoefficientQuery& q);

// ---------------------------------------------------------------------------
// Saturation

struct SaturationReport {
  HiveBoundary boundary;
  Flag phi;
  std::vector<long long> values;  // values[k-1] = c at dilation k
  std::vector<std::string> findings;
  bool pass() const { return findings.empty(); }
  json to_json() const;
  std::string to_text() const;
};

/// Hive counts at k = 1..k_max; records a finding when (some c_k > 0) differs
/// from c_1 > 0, or when c_1 > 0 but some c_k = 0.
SaturationReport saturation_scan(const HiveBoundary& b, const Flag& phi, int k_max, std::size_t limit = 1000000);

// ---------------------------------------------------------------------------
// Cross-check over a grid

struct GridSpec {
  std::size_t n = 2;
  int max_mu = 4;
  std::optional<int> max_lambda;  // defaults to max_mu
  std::vector<Flag> flags;        // empty: every flag of length n
  bool lift = true;               // compare with triangular hives under the lift, check psi round trips
  bool decomposition = true;      // decomposition character check per (mu, gamma, Phi)
  int saturation_k = 0;           // > 0: also run saturation scans up to this dilation
  std::size_t limit = 1000000;
  unsigned threads = 0;           // 0: hardware concurrency
};

struct TupleOutcome {
  HiveBoundary boundary;
  Flag phi;
  long long tableau = 0, hive = 0, demazure = 0;
  std::optional<long long> lifted;       // triangular Kogan-face count
  std::vector<long long> dilations;      // saturation values when requested
  std::string failure;                   // empty on success
  json to_json() const;
};

struct CrossCheckSummary {
  GridSpec spec;
  bool anchor_ok = false;
  std::size_t tuples = 0, failures = 0;
  std::size_t lifted_checks = 0, psi_round_trips = 0;
  std::size_t decompositions = 0, decomposition_failures = 0;
  std::size_t saturation_scans = 0;
  std::vector<TupleOutcome> outcomes;    // grid order, up to the first failure
  std::vector<std::string> decomposition_messages;
  std::optional<TupleOutcome> first_failure;
  double seconds = 0;
  bool pass() const { return anchor_ok && failures == 0 && decomposition_failures == 0; }
  json to_json(bool matrix = true) const;
  std::string to_text() const;
};

/// The n = 4 anchor hive (lambda=(3,1,1,0), mu=(5,4,2,1), gamma=(2,1,0,0),
/// nu=(7,4,2,1), Phi=(2,2,3,4)) validated with the standard content formula.
bool anchor_hive_valid();

/// Every tuple is independent; they are distributed over a worker pool and
/// halted at the first failure (all earlier tuples are always completed).
CrossCheckSummary cross_check(const GridSpec& spec, const std::function<bool()>& anchor = anchor_hive_valid);

// ---------------------------------------------------------------------------
// Decomposition and hive reports

struct DecompositionReport {
  Partition mu, gamma;
  std::vector<int> bounds;
  std::optional<StringWitness> witness;  // string property failure
  std::vector<DemazureComponent> components;
  bool character_matches = false;
  bool classes_match = false;         // only when bounds form a flag
  bool is_flag = false;
  bool pass() const { return !witness && character_matches && (!is_flag || classes_match); }
  json to_json() const;
  std::string to_text() const;
};

DecompositionReport decomposition_report(const Partition& mu, const Partition& gamma, const std::vector<int>& bounds);

struct HiveIsoReport {
  HiveBoundary boundary;
  Flag phi;
  std::optional<LiftedData> lifted;  // absent when lambda is not inside nu
  std::size_t skew = 0, triangular = 0, round_trips = 0;
  std::vector<std::string> findings;
  bool pass() const { return findings.empty(); }
  json to_json() const;
  std::string to_text() const;
};

HiveIsoReport hive_iso(const HiveBoundary& b, const Flag& phi, std::size_t limit = 1000000);

}  // namespace skewlr
