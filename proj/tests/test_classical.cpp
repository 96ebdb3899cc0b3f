#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qdc/classical.hpp"

using namespace qdc;
using Catch::Approx;

TEST_CASE("strategy counting", "[classical]") {
  REQUIRE(strategy_count(4, 2, 2) == 256);
  REQUIRE(strategy_count(3, 2, 2) == 128);
  REQUIRE(strategy_count(1, 1, 1) == 2);

  REQUIRE(enumerate_strategies(4, 2, 2).size() == 256);
  REQUIRE(enumerate_strategies(3, 2, 2).size() == 128);
  REQUIRE(enumerate_strategies(1, 1, 1).size() == 2);

  SECTION("guard rejects oversized spaces") {
    REQUIRE_THROWS_AS(enumerate_strategies(8, 4, 10), EnumerationLimitError);
    REQUIRE_THROWS_AS(classical_max(WitnessKind::linear_idw, 8, 4, 10, 0, 0),
                      EnumerationLimitError);
  }

  SECTION("enumeration covers distinct strategies") {
    const auto all = enumerate_strategies(2, 1, 2);
    REQUIRE(all.size() == 16);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) {
        const bool same =
            all[i].prep == all[j].prep && all[i].response == all[j].response;
        REQUIRE_FALSE(same);
      }
  }
}

TEST_CASE("strategy tables", "[classical]") {
  SECTION("constant outcome 0 gives the all-ones table") {
    ClassicalStrategy s;
    s.dim = 2;
    s.prep = {0, 1, 0, 1};
    s.response = {0, 0, 0, 0};  // outcome 0 for every (message, setting)
    const ProbTable t = strategy_table(s, 4, 2);
    REQUIRE(t.p.minCoeff() == 1.0);
  }

  SECTION("uniform mixture of opposite constant responders gives one half") {
    ClassicalStrategy zero, one;
    zero.dim = one.dim = 2;
    zero.prep = one.prep = {0, 0, 0};
    zero.response = {0, 0, 0, 0};
    one.response = {1, 1, 1, 1};
    const MixedStrategy mix = MixedStrategy::make({0.5, 0.5}, {zero, one});
    const ProbTable t = strategy_table(mix, 3, 2);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 2; ++y) REQUIRE(t.p(x, y) == 0.5);
  }

  SECTION("deterministic tables contain only 0 and 1") {
    for (const auto& s : enumerate_strategies(3, 2, 2)) {
      const ProbTable t = strategy_table(s, 3, 2);
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 2; ++y)
          REQUIRE((t.p(x, y) == 0.0 || t.p(x, y) == 1.0));
    }
  }

  SECTION("domain mismatch is rejected") {
    ClassicalStrategy s;
    s.dim = 2;
    s.prep = {0, 1};
    s.response = {0, 1, 1, 0};
    REQUIRE_THROWS_AS(strategy_table(s, 4, 2), std::invalid_argument);
  }

  SECTION("mixture weights must be convex") {
    ClassicalStrategy s;
    s.dim = 2;
    s.prep = {0};
    s.response = {0, 1};
    REQUIRE_THROWS_AS(MixedStrategy::make({0.5, 0.6}, {s, s}), std::invalid_argument);
    REQUIRE_THROWS_AS(MixedStrategy::make({1.0, -0.0}, {s, s}), std::invalid_argument);
    REQUIRE_NOTHROW(MixedStrategy::make({0.25, 0.75}, {s, s}));
  }
}

TEST_CASE("determinant witness vanishes classically", "[classical]") {
  SECTION("exactly zero on all 256 deterministic strategies") {
    for (const auto& s : enumerate_strategies(4, 2, 2)) {
      const WitnessResult r = nonlinear_witness(strategy_table(s, 4, 2));
      REQUIRE(r.value < 1e-12);
    }
  }

  SECTION("stays below 1e-12 with ten thousand seeded mixtures") {
    const double max =
        classical_max(WitnessKind::nonlinear_det, 4, 2, 2, 10000, 20240601);
    REQUIRE(max < 1e-12);
  }
}

TEST_CASE("linear witness classical bound", "[classical]") {
  SECTION("deterministic maximum is exactly 3") {
    const double max = classical_max(WitnessKind::linear_idw, 3, 2, 2, 0, 0);
    REQUIRE(max == 3.0);
  }

  SECTION("mixtures cannot beat the deterministic maximum") {
    const double max = classical_max(WitnessKind::linear_idw, 3, 2, 2, 5000, 99);
    REQUIRE(max <= 3.0 + 1e-12);
  }

  SECTION("one-message strategies are strictly weaker") {
    const double max = classical_max(WitnessKind::linear_idw, 3, 2, 1, 1000, 99);
    REQUIRE(max <= 3.0);
    REQUIRE(max < 3.0 - 0.5);
    REQUIRE(max == Approx(1.0).margin(1e-12));
  }

  SECTION("quantum-classical separation at the maximum point") {
    const double classical = classical_max(WitnessKind::linear_idw, 3, 2, 2, 0, 0);
    const SettingFamily family = SettingFamily::defaults(WitnessKind::linear_idw);
    const double quantum =
        linear_witness(prob_table(family.instantiate(M_PI / 4.0, M_PI / 4.0))).value;
    REQUIRE(quantum - classical ==
            Approx(2.0 * std::sqrt(2.0) - 2.0).margin(1e-12));
  }
}
