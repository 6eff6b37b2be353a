#include "doctest.h"

#include <cstdlib>

#include "cylq/abacus.hpp"
#include "cylq/cylinder.hpp"

using namespace cylq;

namespace {

const std::vector<Row> kExample{{10, 8, 4, 3, 3}, {9, 5, 1}};

}  // namespace

TEST_CASE("worked example") {
  const Abacus2 ab = abacus_from_cylindric(kExample, Profile({3, 0}));
  CHECK(ab.level == 3);
  CHECK(ab.background_shape == 0);
  REQUIRE(ab.yokes.size() == 10);
  // The last yoke joins site 15 on string 1 to site 13 on string 2.
  CHECK(ab.yokes.back().top() == 15);
  CHECK(ab.yokes.back().bottom == 13);
  CHECK(ab.yokes.back().shape == 2);
  CHECK(is_tight_abacus(ab));

  const YokeStats st = yoke_stats(ab);
  CHECK(st.vacancy_counts == std::vector<int>{0, 1, 2, 3, 3, 3, 4, 5, 7, 7, 8});
  CHECK(st.shape_seq == std::vector<int>{0, 1, 0, 1, 1, 1, 0, 1, 3, 3, 2});

  const TwoRowPartition back = cylindric_from_abacus(ab);
  CHECK(back.partition.rows == kExample);
  CHECK(back.profile == Profile({3, 0}));
}

TEST_CASE("empty and single-part partitions") {
  for (int l = 1; l <= 3; ++l)
    for (int a = 0; a <= l; ++a) {
      const Abacus2 sea = abacus_from_cylindric({{}, {}}, Profile({l - a, a}));
      CHECK(sea.yokes.empty());
      CHECK(yoke_stats(sea) == YokeStats{{a}, {0}});
      CHECK(cylindric_from_abacus(sea).partition.rows == std::vector<Row>{{}, {}});
    }
  // ((1),()) in (1,0): one yoke, bottom bead at site 1, top bead at site 2.
  const Abacus2 one = abacus_from_cylindric({{1}, {}}, Profile({1, 0}));
  REQUIRE(one.yokes.size() == 1);
  CHECK(one.yokes[0] == Yoke{1, 1});
}

TEST_CASE("((1),(1)) is not tight as an abacus") {
  const Abacus2 ab = abacus_from_cylindric({{1}, {1}}, Profile({1, 0}));
  CHECK_FALSE(is_tight_abacus(ab));
}

TEST_CASE("validation") {
  CHECK_THROWS(validate_abacus({1, 0, {{1, 1}, {1, 0}}}));
  CHECK_THROWS(validate_abacus({1, 0, {{1, 0}}}));  // continues the sea
  CHECK_THROWS(validate_abacus({1, 0, {{1, 2}}}));  // shape above level
  CHECK_THROWS(validate_abacus({1, 2, {}}));        // background above level
  CHECK_NOTHROW(validate_abacus({2, 1, {{1, 2}, {4, 0}}}));
  CHECK_THROWS(abacus_from_cylindric({{1}, {}}, Profile({1, 0, 0})));
  CHECK_THROWS(abacus_from_cylindric({{}, {1}}, Profile({1, 0})));
}

TEST_CASE("property: round trip, tightness and the gap law on enumerated corpora") {
  for (int l = 1; l <= 4; ++l)
    for (int a = 0; a <= l; ++a) {
      const Profile p({l - a, a});
      for (const auto &pi : enumerate_cylindric(p, l <= 3 ? 12 : 10)) {
        const Abacus2 ab = abacus_from_cylindric(pi.rows, p);
        CHECK(static_cast<int>(ab.yokes.size()) == pi.max_part());
        const TwoRowPartition back = cylindric_from_abacus(ab);
        CHECK(back.partition == pi);
        CHECK(back.profile == p);
        CHECK(abacus_from_cylindric(back.partition.rows, back.profile) == ab);

        const bool tight = is_tight_abacus(ab);
        CHECK(tight == is_tight(pi.rows));
        const YokeStats st = yoke_stats(ab);
        int weight = 0;
        for (int v : st.vacancy_counts) weight += v;
        if (tight) {
          CHECK(weight == pi.weight());
          for (std::size_t i = 1; i < st.shape_seq.size(); ++i)
            CHECK(st.vacancy_counts[i] - st.vacancy_counts[i - 1] == std::abs(st.shape_seq[i] - st.shape_seq[i - 1]));
          std::vector<int> shapes(st.shape_seq.begin() + 1, st.shape_seq.end());
          CHECK(tight_abacus_from_shapes(l, a, shapes) == ab);
        }
      }
    }
}
