#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/rational.hpp>

#include "skewlr/crystal.hpp"
#include "skewlr/hive.hpp"

using namespace skewlr;

namespace {

const Grid<long long> kAnchor = {
    {0, 2, 3, 3, 3}, {3, 7, 9, 10, 10}, {4, 9, 13, 14, 14}, {5, 10, 14, 16, 16}, {5, 10, 14, 16, 17}};

HiveBoundary anchor_boundary() {
  return {Partition({3, 1, 1, 0}), Partition({5, 4, 2, 1}), Partition({2, 1, 0, 0}), Partition({7, 4, 2, 1})};
}

const std::vector<int> kAnchorFlag{2, 2, 3, 4};

// Off-by-one orientation of the NE rhombus: a transcription error of the kind the anchor must catch.
struct CorruptedContents : StandardContents {
  template <class S>
  static S ne(const Grid<S>& h, std::size_t i, std::size_t j) {
    return h[i - 1][j] + h[i][j - 1] - h[i][j] - h[i - 1][j - 1];
  }
};

// Every boundary tuple of the small grid: lambda with |lambda| <= max_mu, gamma inside mu, all nu.
template <class F>
void for_each_tuple(std::size_t n, int max_mu, F&& f) {
  for (const auto& mu : partitions_up_to(max_mu, n))
    for (const auto& gamma : partitions_inside(mu))
      for (const auto& lambda : partitions_up_to(max_mu, n))
        for (const auto& nu : partitions_of(lambda.weight() + mu.weight() - gamma.weight(), n))
          f(HiveBoundary{lambda, mu, gamma, nu});
}

}  // namespace

TEST_CASE("anchor hive, n = 4") {
  auto b = anchor_boundary();
  auto r = validate_skew_hive(kAnchor, b, std::span<const int>(kAnchorFlag));
  CHECK(r.valid());
  CHECK(StandardContents::ne(kAnchor, 1, 1) == 2);
  CHECK(StandardContents::se(kAnchor, 1, 1) == 0);
  CHECK(StandardContents::vert(kAnchor, 1, 0) == 1);
  for (auto [i, j] : flat_region(kAnchorFlag)) CHECK(StandardContents::ne(kAnchor, i, j) == 0);

  auto bumped = kAnchor;
  bumped[2][2] += 1;
  CHECK_FALSE(validate_skew_hive(bumped, b).negative.empty());

  auto bad = b;
  bad.nu = Partition({7, 4, 2, 2});
  CHECK_THROWS_AS(validate_skew_hive(kAnchor, bad), std::invalid_argument);

  // The wrong content formula is rejected on the same labels.
  CHECK_FALSE(validate_skew_hive<long long, CorruptedContents>(kAnchor, b).valid());
}

TEST_CASE("rational labels") {
  using Q = boost::rational<long long>;
  auto b = anchor_boundary();
  auto pts = enumerate_skew_hive_points(b, Flag::full(4)).hives;
  REQUIRE(pts.size() >= 2);
  Grid<Q> mid(5, std::vector<Q>(5));
  for (std::size_t i = 0; i <= 4; ++i)
    for (std::size_t j = 0; j <= 4; ++j) mid[i][j] = Q(pts[0].h[i][j] + pts[1].h[i][j], 2);
  CHECK(validate_skew_hive(mid, b).valid());
  mid[2][2] += Q(1, 2);
  mid[2][2] += Q(1, 2);
  mid[1][1] -= Q(3, 2);
  CHECK_FALSE(validate_skew_hive(mid, b).valid());
}

TEST_CASE("partial_diff and upsilon on the anchor hive") {
  SkewHive h{kAnchor};
  auto x = partial_diff(h);
  CHECK(x.rows == Grid<int>{{2, 1, 0, 0}, {4, 2, 1, 0}, {5, 4, 1, 0}, {5, 4, 2, 0}, {5, 4, 2, 1}});
  auto t = upsilon(x);
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 2}, {1, 3}, {4}});
  CHECK(t.weight() == Composition({4, 3, 1, 1}));
  CHECK(hive_from_gt(x, Partition({3, 1, 1, 0})) == h);
}

TEST_CASE("upsilon examples") {
  SkewGTPattern pattern{{{2, 1, 0, 0}, {3, 2, 0, 0}, {4, 3, 0, 0}, {4, 3, 2, 0}, {4, 3, 2, 1}}};
  auto t = upsilon(pattern);
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2}, {1, 2}, {3, 3}, {4}});
  CHECK(upsilon_inverse(t) == pattern);

  SkewGTPattern flat{{{3, 1}, {3, 1}, {3, 1}}};
  CHECK(upsilon(flat).boxes() == 0);
  CHECK(enumerate_flagged_gt_points(Partition({3, 1}), Partition({3, 1}), std::vector<int>{2, 2}).size() == 1);

  SkewGTPattern broken{{{1, 0}, {0, 1}, {1, 1}}};
  CHECK_THROWS(upsilon(broken));
}

TEST_CASE("flagged GT points") {
  CHECK(enumerate_flagged_gt_points(Partition({2, 2}), Partition({1, 0}), std::vector<int>{2, 2}).size() == 2);
  CHECK(enumerate_flagged_gt_points(Partition({1, 0}), Partition({0, 0}), std::vector<int>{1, 2}).size() == 1);
  CHECK(enumerate_flagged_gt_points(Partition({1, 0}), Partition({2, 0}), std::vector<int>{2, 2}).empty());
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& mu : partitions_up_to(6, n))
      for (const auto& gamma : partitions_inside(mu))
        for (const auto& phi : all_flags(n)) {
          auto pts = enumerate_flagged_gt_points(mu, gamma, phi.bounds());
          auto tabs = enumerate_tableaux(mu, gamma, phi.bounds());
          REQUIRE(pts.size() == tabs.size());
          std::vector<SkewTableau> images;
          for (const auto& x : pts) {
            auto t = upsilon(x);
            CHECK(upsilon_inverse(t) == x);
            images.push_back(t);
          }
          std::sort(images.begin(), images.end());
          CHECK(images == tabs);
        }
}

TEST_CASE("hive_from_gt on the anchor pattern with lambda = 0") {
  SkewGTPattern pattern{{{2, 1, 0, 0}, {3, 2, 0, 0}, {4, 3, 0, 0}, {4, 3, 2, 0}, {4, 3, 2, 1}}};
  auto h = hive_from_gt(pattern, Partition::zero(4));
  bool dominant = is_lambda_dominant(upsilon(pattern), Partition::zero(4));
  CHECK((StandardContents::vert(h.h, 1, 0) < 0) == !dominant);
  CHECK_FALSE(dominant);
  SkewGTPattern zero{Grid<int>(4, std::vector<int>(3, 0))};
  for (const auto& row : hive_from_gt(zero, Partition::zero(3)).h)
    for (long long v : row) CHECK(v == 0);
}

TEST_CASE("skew hive enumeration examples") {
  HiveBoundary pieri{Partition({1, 0}), Partition({1, 0}), Partition({0, 0}), Partition({1, 1})};
  CHECK(enumerate_skew_hive_points(pieri, Flag({2, 2})).points == 1);
  auto fig = enumerate_skew_hive_points(anchor_boundary(), Flag(kAnchorFlag));
  CHECK(std::find(fig.hives.begin(), fig.hives.end(), SkewHive{kAnchor}) != fig.hives.end());
  HiveBoundary bad{Partition({0, 0}), Partition({1, 0}), Partition({0, 0}), Partition({2, 0})};
  CHECK_THROWS_AS(enumerate_skew_hive_points(bad, Flag({2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_skew_hive_points(anchor_boundary(), Flag::full(4), false, 3), ScaleExceeded);
}

TEST_CASE("hive count equals the lambda-dominant tableau count; left inverse; dilation") {
  for (std::size_t n = 2; n <= 3; ++n)
    for_each_tuple(n, n == 2 ? 4 : 3, [&](const HiveBoundary& b) {
      for (const auto& phi : all_flags(n)) {
        auto pts = enumerate_skew_hive_points(b, phi);
        CHECK(static_cast<long long>(pts.points) == coefficient_by_tableaux(b.lambda, b.mu, b.gamma, b.nu, phi));
        for (const auto& h : pts.hives) {
          auto x = partial_diff(h);
          CHECK(hive_from_gt(x, b.lambda) == h);
          CHECK(partial_diff(hive_from_gt(x, b.lambda)) == x);
          SkewHive h2 = h;
          for (auto& row : h2.h)
            for (auto& v : row) v *= 2;
          CHECK(validate_skew_hive(h2.h, b.scaled(2), std::span<const int>(phi.bounds())).valid());
        }
      }
    });
}

TEST_CASE("triangular hives") {
  CHECK(enumerate_tri_hive_points(Partition({2, 1}), Partition({1, 1}), Partition({3, 2})).points == 1);
  CHECK(enumerate_tri_hive_points(Partition({2, 1}), Partition({1, 1}), Partition({4, 1})).points == 0);
  CHECK(enumerate_tri_hive_points(Partition({1, 0}), Partition({1, 0}), Partition({2, 0})).points == 1);
  CHECK(enumerate_tri_hive_points(Partition({2, 1, 0}), Partition({2, 1, 0}), Partition({3, 2, 1})).points == 2);
  CHECK_THROWS_AS(enumerate_tri_hive_points(Partition({1, 0}), Partition({1, 0}), Partition({1, 0})),
                  std::invalid_argument);
  for (const auto& t : enumerate_tri_hive_points(Partition({2, 1, 0}), Partition({2, 1, 0}), Partition({3, 2, 1})).hives)
    CHECK(tri_hive_violation(t, Partition({2, 1, 0}), Partition({2, 1, 0}), Partition({3, 2, 1})).empty());
}

TEST_CASE("a constant boundary side allows at most one hive") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& a : partitions_up_to(3 * static_cast<int>(n), n))
      for (int c = 0; c <= 3; ++c) {
        if (a[0] > 3) continue;
        Partition konst(std::vector<int>(n, c));
        for (const auto& g : partitions_of(a.weight() + konst.weight(), n)) {
          std::vector<int> sum(n);
          for (std::size_t k = 0; k < n; ++k) sum[k] = a[k] + c;
          std::size_t expect = g.parts() == sum ? 1 : 0;
          CHECK(enumerate_tri_hive_points(a, konst, g).points == expect);
          CHECK(enumerate_tri_hive_points(konst, a, g).points == expect);
        }
      }
}

TEST_CASE("lift_tilde") {
  auto lt = lift_tilde(anchor_boundary(), Flag(kAnchorFlag));
  CHECK(lt.lambda == Partition({7, 7, 7, 7, 3, 1, 1, 0}));
  CHECK(lt.mu == Partition({5, 4, 2, 1, 0, 0, 0, 0}));
  CHECK(lt.nu == Partition({9, 8, 7, 7, 7, 4, 2, 1}));
  CHECK(lt.phi == Flag({6, 6, 7, 8, 8, 8, 8, 8}));
  CHECK(lt.lambda.weight() + lt.mu.weight() == lt.nu.weight());

  auto zero = lift_tilde(HiveBoundary{Partition({0}), Partition({0}), Partition({0}), Partition({0})}, Flag({1}));
  CHECK(zero.lambda == Partition({0, 0}));
  CHECK(zero.mu == Partition({0, 0}));
  CHECK(zero.nu == Partition({0, 0}));

  auto l3 = lift_tilde(anchor_boundary().scaled(3), Flag(kAnchorFlag));
  CHECK(l3.lambda == lt.lambda.scaled(3));
  CHECK(l3.mu == lt.mu.scaled(3));
  CHECK(l3.nu == lt.nu.scaled(3));

  HiveBoundary bad{Partition({1, 0}), Partition({1, 0}), Partition({2, 0}), Partition({0, 0})};
  CHECK_THROWS_AS(lift_tilde(bad, Flag({2, 2})), std::invalid_argument);
}

TEST_CASE("psi on the anchor hive") {
  auto b = anchor_boundary();
  auto t = psi(SkewHive{kAnchor}, b);
  REQUIRE(t.size() == 8);
  std::vector<long long> left;
  for (const auto& row : t.h) left.push_back(row[0]);
  CHECK(left == std::vector<long long>{0, 7, 14, 21, 28, 31, 32, 33, 33});
  auto lt = lift_tilde(b, Flag(kAnchorFlag));
  CHECK(tri_hive_violation(t, lt.lambda, lt.mu, lt.nu, std::span<const int>(lt.phi.bounds())).empty());
  CHECK(psi_inverse(t, 4, 7) == SkewHive{kAnchor});
}

TEST_CASE("psi is a bijection on integral points, n = 2") {
  for_each_tuple(2, 4, [&](const HiveBoundary& b) {
    if (!b.nu.contains(b.lambda)) return;
    for (const auto& phi : all_flags(2)) {
      auto pts = enumerate_skew_hive_points(b, phi);
      auto lt = lift_tilde(b, phi);
      auto tri = enumerate_tri_hive_points(lt.lambda, lt.mu, lt.nu, std::span<const int>(lt.phi.bounds()));
      CHECK(pts.points == tri.points);
      std::vector<TriHive> images;
      for (const auto& h : pts.hives) {
        auto t = psi(h, b);
        CHECK(psi_inverse(t, 2, b.nu[0]) == h);
        images.push_back(t);
      }
      auto by_rows = [](const TriHive& x, const TriHive& y) { return x.h < y.h; };
      std::sort(images.begin(), images.end(), by_rows);
      std::sort(tri.hives.begin(), tri.hives.end(), by_rows);
      CHECK(images == tri.hives);
    }
  });
}

TEST_CASE("rendering") {
  auto s = render(SkewHive{kAnchor});
  CHECK(s.find("   0   2   3   3   3\n") != std::string::npos);
  CHECK(s.find("\n   5  10  14  16  17\n") != std::string::npos);
  CHECK(render(TriHive{{{0}, {1, 2}}}).size() > 0);
}
