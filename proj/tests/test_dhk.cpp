#include "doctest.h"

#include <random>
#include <set>

#include "cylq/dhk.hpp"

using namespace cylq;

namespace {

const std::vector<Row> kExample{{10, 8, 4, 3, 3}, {9, 5, 1}};
const std::vector<int> kExampleColors{2, 3, 3, 1, 0, 1, 1, 1, 0, 1, 0};

}  // namespace

TEST_CASE("from colors") {
  const DHKPartition x = dhk_from_colors(3, kExampleColors);
  CHECK(x.parts == std::vector<int>{8, 7, 7, 5, 4, 3, 3, 3, 2, 1, 0});
  CHECK(x.weight() == 43);
  CHECK(x.num_parts() == 10);
  CHECK(x.ground == 0);

  const DHKPartition empty = dhk_from_colors(1, {0});
  CHECK(empty.num_parts() == 0);
  CHECK(empty.weight() == 0);

  const DHKPartition one = dhk_from_colors(1, {1, 0});
  CHECK(one.parts == std::vector<int>{1, 0});
  CHECK(one.weight() == 1);
  CHECK(one.num_parts() == 1);

  CHECK_THROWS(dhk_from_colors(1, {2, 0}));
  CHECK_THROWS(dhk_from_colors(1, {1, 0, 0}));
  CHECK_THROWS(dhk_from_colors(1, {}));
}

TEST_CASE("enumeration") {
  const auto small = enumerate_dhk(1, 0, 3);
  std::vector<std::vector<int>> colors;
  for (const auto &x : small) colors.push_back(x.colors);
  const std::vector<std::vector<int>> want{{0}, {1, 0}, {1, 1, 0}, {0, 1, 0}, {1, 1, 1, 0}};
  CHECK(colors == want);
  std::vector<int> weights;
  for (const auto &x : small) weights.push_back(x.weight());
  CHECK(weights == std::vector<int>{0, 1, 2, 3, 3});

  for (int a = 0; a <= 3; ++a) {
    const auto zero = enumerate_dhk(3, a, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].colors == std::vector<int>{a});
  }

  Series expect(3, 3);
  expect.add_to(0, 0, 1);
  expect.add_to(1, 1, 1);
  expect.add_to(2, 2, 1);
  expect.add_to(3, 2, 1);
  expect.add_to(3, 3, 1);
  CHECK(gf_dhk(1, 0, 3, 3) == expect);
  CHECK(gf_dhk(2, 1, 0, 0) == series_const(1, 0, 0));
}

TEST_CASE("property: enumeration is duplicate-free and complete against a color-walk filter") {
  for (int l = 1; l <= 3; ++l)
    for (int a = 0; a <= l; ++a) {
      const int cap = 7;
      const auto fast = enumerate_dhk(l, a, cap);
      std::set<std::vector<int>> seen;
      for (const auto &x : fast) seen.insert(x.colors);
      CHECK(seen.size() == fast.size());
      // Any color sequence of length s has weight >= s - 1, so length cap + 1
      // bounds the search.
      std::set<std::vector<int>> slow;
      std::vector<int> seq;
      auto rec = [&](auto &&self) -> void {
        std::vector<int> colors(seq.begin(), seq.end());
        colors.push_back(a);
        try {
          if (dhk_from_colors(l, colors).weight() <= cap) slow.insert(colors);
        } catch (const std::invalid_argument &) {
        }
        if (static_cast<int>(seq.size()) == cap) return;
        for (int u = 0; u <= l; ++u) {
          seq.push_back(u);
          self(self);
          seq.pop_back();
        }
      };
      rec(rec);
      CHECK(seen == slow);
    }
}

TEST_CASE("bijection on the worked example") {
  const DHKPartition x = dhk_from_tight(kExample, Profile({3, 0}));
  CHECK(x.colors == kExampleColors);
  CHECK(x.parts == std::vector<int>{8, 7, 7, 5, 4, 3, 3, 3, 2, 1, 0});
  CHECK(x.weight() == 43);
  CHECK(x.num_parts() == 10);

  const TwoRowPartition back = tight_from_dhk(x);
  CHECK(back.partition.rows == kExample);
  CHECK(back.profile == Profile({3, 0}));
}

TEST_CASE("bijection edge cases") {
  for (int a = 0; a <= 2; ++a) {
    const DHKPartition x = dhk_from_tight({{}, {}}, Profile({2 - a, a}));
    CHECK(x.colors == std::vector<int>{a});
    const TwoRowPartition back = tight_from_dhk(x);
    CHECK(back.partition.rows == std::vector<Row>{{}, {}});
    CHECK(back.profile == Profile({2 - a, a}));
  }
  CHECK_THROWS_AS(dhk_from_tight({{1}, {1}}, Profile({1, 0})), NotTight);
}

TEST_CASE("property: bijection round trips and transports statistics") {
  for (int l = 1; l <= 4; ++l)
    for (int a = 0; a <= l; ++a) {
      const Profile p({l - a, a});
      const int cap = l <= 3 ? 12 : 10;
      for (const auto &pi : enumerate_tight(p, cap)) {
        const DHKPartition x = dhk_from_tight(pi.rows, p);
        CHECK(x.weight() == pi.weight());
        CHECK(x.num_parts() == pi.max_part());
        CHECK(x.ground == a);
        const TwoRowPartition back = tight_from_dhk(x);
        CHECK(back.partition == pi);
      }
      for (const auto &x : enumerate_dhk(l, a, cap)) {
        const TwoRowPartition pi = tight_from_dhk(x);
        CHECK(pi.profile == p);
        CHECK(is_tight(pi.partition.rows));
        CHECK(dhk_from_tight(pi.partition.rows, pi.profile) == x);
      }
      CHECK(gf_dhk(l, a, cap, cap) == gf_tight(p, cap));
    }
}

TEST_CASE("property: random color walks survive the round trip") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int l = 1 + static_cast<int>(rng() % 5);
    const int s = 1 + static_cast<int>(rng() % 12);
    std::vector<int> colors(static_cast<std::size_t>(s));
    for (auto &u : colors) u = static_cast<int>(rng() % static_cast<unsigned>(l + 1));
    if (s >= 2 && colors[static_cast<std::size_t>(s - 2)] == colors.back()) continue;
    const DHKPartition x = dhk_from_colors(l, colors);
    const TwoRowPartition pi = tight_from_dhk(x);
    CHECK(pi.partition.weight() == x.weight());
    CHECK(pi.partition.max_part() == x.num_parts());
    CHECK(dhk_from_tight(pi.partition.rows, pi.profile) == x);
  }
}
