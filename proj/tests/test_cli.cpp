#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlr/cli.hpp"

using namespace skewlr;

namespace {

const Partition z2({0, 0}), p10({1, 0}), p11({1, 1}), p20({2, 0});

CoefficientQuery pieri(const Flag& phi, std::optional<Partition> nu) {
  return {p10, p10, z2, std::move(nu), phi, Method::all, 1000000};
}

HiveBoundary anchor() {
  return {Partition({3, 1, 1, 0}), Partition({5, 4, 2, 1}), Partition({2, 1, 0, 0}), Partition({7, 4, 2, 1})};
}

}  // namespace

TEST_CASE("run_coefficient") {
  auto r = run_coefficient(pieri(Flag({2, 2}), p11));
  CHECK(r.agree());
  CHECK(r.values.size() == 3);
  for (const auto& [name, v] : r.values) CHECK(v == 1);
  CHECK(r.to_json()["value"] == 1);

  auto r0 = run_coefficient(pieri(Flag({1, 2}), p11));
  CHECK(r0.agree());
  CHECK(r0.values.at("hive") == 0);

  auto t = run_coefficient(pieri(Flag({1, 2}), std::nullopt));
  CHECK(t.agree());
  for (const auto& [name, table] : t.tables) CHECK(table == std::map<Partition, long long>{{p20, 1}});

  auto bad = pieri(Flag({2, 2}), Partition({1, 1, 0}));
  CHECK_THROWS_AS(run_coefficient(bad), std::invalid_argument);
  CHECK_THROWS_AS(parse_method("lr"), std::invalid_argument);

  CoefficientQuery single{p10, p10, z2, p11, Flag({2, 2}), Method::hive, 1000000};
  CHECK(run_coefficient(single).values.size() == 1);
  CoefficientQuery outside{z2, p10, p20, p10, Flag({2, 2}), Method::all, 1000000};
  CHECK(run_coefficient(outside).values.at("hive") == 0);
}

TEST_CASE("saturation_scan") {
  auto s = saturation_scan({p10, p10, z2, p11}, Flag({2, 2}), 3);
  CHECK(s.values == std::vector<long long>{1, 1, 1});
  CHECK(s.pass());

  auto z = saturation_scan({z2, z2, z2, z2}, Flag({2, 2}), 3);
  CHECK(z.values == std::vector<long long>{1, 1, 1});

  auto f = saturation_scan(anchor(), Flag({2, 2, 3, 4}), 2);
  CHECK(f.values[0] >= 1);
  CHECK(f.values[1] >= 1);
  CHECK(f.pass());

  CHECK_THROWS_AS(saturation_scan({p10, p10, z2, p11}, Flag({2, 2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(saturation_scan(anchor(), Flag::full(4), 3, 10), ScaleExceeded);
}

TEST_CASE("cross_check on the n = 2 grid") {
  GridSpec spec;
  spec.threads = 4;
  auto s = cross_check(spec);
  CHECK(s.pass());
  CHECK(s.tuples > 500);
  CHECK(s.lifted_checks > 0);
  CHECK(s.psi_round_trips > 0);
  CHECK(s.decompositions > 0);

  spec.threads = 1;
  auto again = cross_check(spec);
  auto a = s.to_json(), b = again.to_json();
  a.erase("seconds");
  b.erase("seconds");
  CHECK(a == b);
}

TEST_CASE("cross_check on n = 3 with the standard and full flags") {
  GridSpec spec;
  spec.n = 3;
  spec.max_mu = 5;
  spec.max_lambda = 3;
  spec.flags = {Flag::standard(3), Flag::full(3)};
  auto s = cross_check(spec);
  CHECK(s.pass());
  CHECK(s.tuples > 1000);
}

TEST_CASE("cross_check negative control") {
  // NE content with the wrong orientation.
  auto corrupted = [] {
    const Grid<long long> h = {
        {0, 2, 3, 3, 3}, {3, 7, 9, 10, 10}, {4, 9, 13, 14, 14}, {5, 10, 14, 16, 16}, {5, 10, 14, 16, 17}};
    for (std::size_t i = 1; i <= 4; ++i)
      for (std::size_t j = 1; j <= 4; ++j)
        if (h[i - 1][j] + h[i][j - 1] - h[i][j] - h[i - 1][j - 1] < 0) return false;
    return true;
  };
  auto s = cross_check(GridSpec{}, corrupted);
  CHECK_FALSE(s.anchor_ok);
  CHECK_FALSE(s.pass());
  CHECK(s.to_text().find("FAILED") != std::string::npos);
  CHECK(anchor_hive_valid());
}

TEST_CASE("decomposition_report") {
  auto ok = decomposition_report(Partition({2, 2}), Partition({1, 0}), {2, 2});
  CHECK(ok.pass());
  REQUIRE(ok.components.size() == 1);
  CHECK(ok.components[0].key_weight == Composition({1, 2}));

  auto counter = decomposition_report(Partition({3, 2, 0}), Partition({1, 0, 0}), {3, 2, 3});
  REQUIRE(counter.witness);
  CHECK_FALSE(counter.pass());
  CHECK(counter.to_json()["string_property"] == false);
  CHECK(counter.to_text().find("FAILS") != std::string::npos);
}

TEST_CASE("hive_iso") {
  auto r = hive_iso(anchor(), Flag({2, 2, 3, 4}));
  CHECK(r.pass());
  CHECK(r.skew == r.triangular);
  CHECK(r.round_trips == r.skew);
  CHECK(r.skew >= 1);

  auto none = hive_iso({p20, z2, z2, p20}, Flag({2, 2}));
  CHECK(none.pass());
}
