// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "qmarkov/markov.hpp"
#include "test_util.hpp"

using namespace qmarkov;

namespace {

TransitionMatrix random_stochastic(std::mt19937_64& rng) {
  TransitionMatrix tm(2);
  for (std::size_t r = 0; r < 2; ++r) {
    const double p = test::uniform(rng, 0.0, 1.0);
    tm.at(r, 0) = 1.0 - p;
    tm.at(r, 1) = p;
  }
  return tm;
}

}  // namespace

TEST_CASE("validate accepts row-stochastic matrices") {
  CHECK(validate(TransitionMatrix{{0.5, 0.5}, {0.5, 0.5}}).ok);
  CHECK(validate(TransitionMatrix{{1.0, 0.0}, {0.0, 1.0}}).ok);

  const RowCheck bad = validate(TransitionMatrix{{1.0, 0.1}, {0.5, 0.5}});
  CHECK(!bad.ok);
  CHECK(bad.row == 0);
  CHECK(bad.row_sum == doctest::Approx(1.1));
  CHECK(!bad.message.empty());

  const RowCheck negative = validate(TransitionMatrix{{1.2, -0.2}, {0.5, 0.5}});
  CHECK(!negative.ok);
  CHECK(negative.row == 0);
}

TEST_CASE("step propagates one transition") {
  const TransitionMatrix identity{{1.0, 0.0}, {0.0, 1.0}};
  const DistributionVector point{{1.0, 0.0}};
  CHECK(step(point, identity).probs == std::vector<double>{1.0, 0.0});

  const TransitionMatrix fair{{0.5, 0.5}, {0.5, 0.5}};
  const auto spread = step(point, fair);
  CHECK(spread.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(spread.probs[1] == doctest::Approx(0.5).epsilon(1e-12));

  const TransitionMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  const auto swapped = step(DistributionVector{{0.5, 0.5}}, swap);
  CHECK(swapped.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(swapped.probs[1] == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(step(DistributionVector{{1.0, 0.0, 0.0}}, identity),
                  std::invalid_argument);
}

TEST_CASE("path_distribution enumerates exhaustively") {
  const TransitionMatrix identity{{1.0, 0.0}, {0.0, 1.0}};
  const TransitionMatrix fair{{0.5, 0.5}, {0.5, 0.5}};

  const auto pinned = path_distribution(DistributionVector{{1.0, 0.0}},
                                        {identity, identity});
  CHECK(pinned.length() == 3);
  CHECK(pinned.size() == 8);
  CHECK(pinned.at("000") == 1.0);
  for (std::size_t i = 1; i < 8; ++i) CHECK(pinned.at(i) == 0.0);

  const auto uniform =
      path_distribution(DistributionVector{{0.5, 0.5}}, {fair, fair});
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(uniform.at(i) == doctest::Approx(0.125).epsilon(1e-12));
  }

  const auto held =
      path_distribution(DistributionVector{{0.25, 0.75}}, {identity});
  CHECK(held.at("00") == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(held.at("11") == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(held.at("01") == 0.0);
  CHECK(held.at("10") == 0.0);

  // No steps: the path distribution is the initial law.
  const auto single = path_distribution(DistributionVector{{0.3, 0.7}}, {});
  CHECK(single.length() == 1);
  CHECK(single.at("1") == doctest::Approx(0.7).epsilon(1e-12));

  CHECK_THROWS_AS(
      path_distribution(DistributionVector{{1.0, 0.0, 0.0}}, {identity}),
      std::invalid_argument);
}

TEST_CASE("path strings round-trip with indices") {
  const TransitionMatrix fair{{0.5, 0.5}, {0.5, 0.5}};
  const auto dist =
      path_distribution(DistributionVector{{0.5, 0.5}}, {fair, fair});
  CHECK(dist.path_string(0) == "000");
  CHECK(dist.path_string(4) == "100");
  CHECK(dist.path_string(7) == "111");
  for (std::size_t i = 0; i < dist.size(); ++i) {
    CHECK(dist.at(dist.path_string(i)) == dist.at(i));
  }
  CHECK_THROWS_AS(dist.at("0000"), std::invalid_argument);
  CHECK_THROWS_AS(dist.at("002"), std::invalid_argument);
  CHECK_THROWS_AS(dist.at(8), std::out_of_range);
}

TEST_CASE("path marginals agree with repeated stepping") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    DistributionVector initial{{0.0, 0.0}};
    initial.probs[1] = test::uniform(rng, 0.0, 1.0);
    initial.probs[0] = 1.0 - initial.probs[1];
    std::vector<TransitionMatrix> steps;
    for (int i = 0; i < 3; ++i) steps.push_back(random_stochastic(rng));

    const auto joint = path_distribution(initial, steps);
    DistributionVector marginal = initial;
    for (std::size_t k = 0; k < 4; ++k) {
      // Sum the joint over all but position k.
      double p1 = 0.0;
      for (std::size_t path = 0; path < joint.size(); ++path) {
        if (joint.path_string(path)[k] == '1') p1 += joint.at(path);
      }
      CAPTURE(trial);
      CAPTURE(k);
      CHECK(std::abs(marginal.probs[1] - p1) < 1e-12);
      if (k < 3) marginal = step(marginal, steps[k]);
    }
  }
}

TEST_CASE("the joint distribution has the Markov property") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    DistributionVector initial{{0.0, 0.0}};
    initial.probs[1] = test::uniform(rng, 0.0, 1.0);
    initial.probs[0] = 1.0 - initial.probs[1];
    const std::vector<TransitionMatrix> steps{random_stochastic(rng),
                                              random_stochastic(rng)};
    const auto joint = path_distribution(initial, steps);

    for (std::size_t x1 = 0; x1 < 2; ++x1) {
      // P(x2 | x1) from the pair marginal.
      double p_x1 = 0.0, p_x1_x2[2] = {0.0, 0.0};
      for (std::size_t path = 0; path < 8; ++path) {
        const auto s = joint.path_string(path);
        if (static_cast<std::size_t>(s[1] - '0') != x1) continue;
        p_x1 += joint.at(path);
        p_x1_x2[s[2] - '0'] += joint.at(path);
      }
      if (p_x1 < 1e-15) continue;
      for (std::size_t x0 = 0; x0 < 2; ++x0) {
        // P(x2 | x1, x0) must match wherever the condition has mass.
        double p_pair = 0.0, p_triple[2] = {0.0, 0.0};
        for (std::size_t path = 0; path < 8; ++path) {
          const auto s = joint.path_string(path);
          if (static_cast<std::size_t>(s[0] - '0') != x0 ||
              static_cast<std::size_t>(s[1] - '0') != x1) {
            continue;
          }
          p_pair += joint.at(path);
          p_triple[s[2] - '0'] += joint.at(path);
        }
        if (p_pair < 1e-15) continue;
        for (std::size_t x2 = 0; x2 < 2; ++x2) {
          CHECK(std::abs(p_triple[x2] / p_pair - p_x1_x2[x2] / p_x1) < 1e-12);
        }
      }
    }
  }
}
