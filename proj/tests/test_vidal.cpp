#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcat/oracle.hpp"
#include "entcat/vidal.hpp"
#include "support.hpp"

#include <random>

using namespace entcat;
using entcat::testing::catalyst_from_ratio;
using entcat::testing::pair_of;
using entcat::testing::pv;
using entcat::testing::rat;

TEST_CASE("max_prob on the worked pairs") {
  CHECK(max_prob(pv("0.6,0.2,0.2"), pv("0.5,0.4,0.1")) == Rat(4, 5));
  CHECK(max_prob(pv("0.6,0.2,0.2"), pv("0.5,0.3,0.2")) == Rat(4, 5));
  CHECK(max_prob(pv("0.6,0.2,0.2"), pv("0.6,0.2,0.2")) == 1);
  // the last tail of y is zero and must be skipped, not divided by
  CHECK(max_prob(pv("0.4,0.4,0.1,0.1"), pv("0.5,0.25,0.25,0")) == Rat(4, 5));
  CHECK_THROWS_AS(max_prob(pv("0.5,0.5"), pv("1")), std::invalid_argument);
}

TEST_CASE("transform pair caches tails and P") {
  const TransformPair pair = entcat::testing::example1_pair_a();
  CHECK(pair.dimension() == 3);
  CHECK(pair.max_probability() == Rat(4, 5));
  CHECK(pair.x_tails().at(2) == rat("0.4"));
  CHECK(pair.y_tails().at(2) == rat("0.5"));

  // padding through make: y gets two exact zeros
  const TransformPair padded = pair_of("0.6,0.2,0.2", "1");
  CHECK(padded.dimension() == 3);
  CHECK(padded.max_probability() == 1);

  CHECK_THROWS_AS(pair_of("1", "1"), std::invalid_argument);
}

TEST_CASE("critical sets") {
  CHECK(critical_set(entcat::testing::example1_pair_a()) == CriticalSet{2});
  CHECK(critical_set(entcat::testing::example2_pair()) == CriticalSet{3});
  // x = y: every interior ratio equals P = 1
  CHECK(critical_set(pair_of("0.6,0.2,0.2", "0.6,0.2,0.2")) == CriticalSet{2});
  CHECK(critical_set(pair_of("0.4,0.3,0.2,0.1", "0.4,0.3,0.2,0.1")) ==
        CriticalSet{2, 3});
}

TEST_CASE("admissibility under the two strict inequalities") {
  CHECK(catalysis_admissible(entcat::testing::example1_pair_a()));
  CHECK_FALSE(catalysis_admissible(pair_of("0.6,0.2,0.2", "0.6,0.2,0.2")));
  // P attained at the last index: no catalyst can help
  CHECK_FALSE(catalysis_admissible(pair_of("0.7,0.2,0.1", "0.4,0.3,0.3")));
  // E_n(y) = 0 counts as an infinite ratio, so only P < 1 is required
  CHECK(catalysis_admissible(entcat::testing::example2_pair()));
}

TEST_CASE("P lies in (0,1] and equals 1 exactly on majorized pairs") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 2 + it % 4;
    const TransformPair pair = random_pair(rng, n, 1000);
    const Rat& p = pair.max_probability();
    CHECK(p > 0);
    CHECK(p <= 1);
    CHECK((p == 1) == majorized_by(pair.x(), pair.y()));
  }
}

TEST_CASE("critical indices are interior and attain the minimum exactly") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 150; ++it) {
    const TransformPair pair = random_pair(rng, 3 + it % 3, 1000);
    for (std::size_t l : critical_set(pair)) {
      CHECK(l >= 2);
      CHECK(l < pair.dimension());
      CHECK(pair.x_tails().at(l) == pair.max_probability() * pair.y_tails().at(l));
    }
    // admissible implies the minimum is attained strictly inside
    if (catalysis_admissible(pair)) CHECK_FALSE(critical_set(pair).empty());
  }
}

TEST_CASE("lifting by a catalyst never lowers the probability") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    const TransformPair pair = random_pair(rng, 3 + it % 2, 200);
    const ProbVec c = random_prob_vec(rng, 2 + it % 3, 50);
    CHECK(catalyzed_prob(pair.x(), pair.y(), c) >= pair.max_probability());
  }
}

TEST_CASE("inadmissible pairs gain nothing from sampled catalysts") {
  std::mt19937_64 rng(24);
  int seen = 0;
  for (int it = 0; seen < 25 && it < 400; ++it) {
    const TransformPair pair = random_pair(rng, 3 + it % 3, 1000);
    if (catalysis_admissible(pair)) continue;
    ++seen;
    for (int j = 0; j < 4; ++j) {
      const ProbVec c = random_prob_vec(rng, 2 + j, 40);
      CHECK(catalyzed_prob(pair.x(), pair.y(), c) == pair.max_probability());
    }
    CHECK(catalyzed_prob(pair.x(), pair.y(), catalyst_from_ratio(rat("1/3"))) ==
          pair.max_probability());
  }
  CHECK(seen == 25);
}

TEST_CASE("a pair whose x has a dead tail is never admissible") {
  // E_3(x) = 0 with E_3(y) > 0 forces P = 0
  const TransformPair pair = pair_of("0.5,0.5,0,0", "0.4,0.3,0.2,0.1");
  CHECK(pair.max_probability() == 0);
  CHECK_FALSE(catalysis_admissible(pair));
  CHECK(catalyzed_prob(pair.x(), pair.y(), pv("0.7,0.3")) == 0);
}
