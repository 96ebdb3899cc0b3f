#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qdc/sampling.hpp"

#include "oracle.hpp"

using namespace qdc;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

PamSettings max_violation_settings() {
  return SettingFamily::defaults(WitnessKind::linear_idw).instantiate(kPi / 4.0, kPi / 4.0);
}
}  // namespace

TEST_CASE("noise config validation", "[sampling]") {
  REQUIRE_THROWS_AS((NoiseConfig{0, 0.0, 1.0, 1}.validate()), std::invalid_argument);
  REQUIRE_THROWS_AS((NoiseConfig{10, 1.0, 1.0, 1}.validate()), std::invalid_argument);
  REQUIRE_THROWS_AS((NoiseConfig{10, 0.0, 0.0, 1}.validate()), std::invalid_argument);
  REQUIRE_NOTHROW((NoiseConfig{10, 0.0, 1.0, 1}.validate()));
}

TEST_CASE("sampling determinism", "[sampling]") {
  const PamSettings settings = max_violation_settings();
  const NoiseConfig noise{10000, 0.3, 0.8, 987654321};
  const CountTable a = sample_counts(settings, noise);
  const CountTable b = sample_counts(settings, noise);
  REQUIRE(a.cells.size() == b.cells.size());
  for (size_t i = 0; i < a.cells.size(); ++i) {
    REQUIRE(a.cells[i].n0 == b.cells[i].n0);
    REQUIRE(a.cells[i].n1 == b.cells[i].n1);
    REQUIRE(a.cells[i].n_lost == b.cells[i].n_lost);
  }

  const CountTable c = sample_counts(settings, {10000, 0.3, 0.8, 987654322});
  bool any_difference = false;
  for (size_t i = 0; i < a.cells.size(); ++i)
    any_difference |= a.cells[i].n0 != c.cells[i].n0;
  REQUIRE(any_difference);
}

TEST_CASE("count table structure", "[sampling]") {
  const PamSettings settings{{0.2, 1.0, 2.2}, {0.0, kPi / 2.0}, kPi / 5.0};
  const NoiseConfig noise{5000, 0.4, 0.7, 31415};
  const CountTable counts = sample_counts(settings, noise);
  REQUIRE(counts.n_prep == 3);
  REQUIRE(counts.n_meas == 2);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 2; ++y) {
      const CellCounts& cell = counts.at(x, y);
      REQUIRE(cell.n0 + cell.n1 + cell.n_lost == noise.shots_per_setting);
      REQUIRE(cell.n0 >= 0);
      REQUIRE(cell.n1 >= 0);
      REQUIRE(cell.n_lost >= 0);
    }
}

TEST_CASE("sampled frequencies track the model", "[sampling]") {
  SECTION("fair-coin regime at angle 0") {
    const PamSettings settings{{0.3}, {0.0}, 0.0};
    const NoiseConfig noise{1000000, 0.0, 1.0, 555};
    const CountTable counts = sample_counts(settings, noise);
    const CellCounts& cell = counts.at(0, 0);
    const double sigma = std::sqrt(0.25 / noise.shots_per_setting);
    REQUIRE(std::abs(static_cast<double>(cell.n0) / noise.shots_per_setting - 0.5) <
            5.0 * sigma);
    REQUIRE(cell.n_lost == 0);
  }

  SECTION("half the shots are lost at loss 0.5") {
    const PamSettings settings{{0.3}, {0.0}, 0.2};
    const NoiseConfig noise{1000000, 0.5, 1.0, 556};
    const CountTable counts = sample_counts(settings, noise);
    const CellCounts& cell = counts.at(0, 0);
    const double sigma = std::sqrt(0.25 / noise.shots_per_setting);
    REQUIRE(std::abs(static_cast<double>(cell.n_lost) / noise.shots_per_setting - 0.5) <
            5.0 * sigma);
  }

  SECTION("certain cells never click the wrong detector") {
    const PamSettings settings{{0.9}, {0.9}, kPi / 4.0};  // p = 1 exactly
    const NoiseConfig noise{100000, 0.2, 0.9, 557};
    const CountTable counts = sample_counts(settings, noise);
    const CellCounts& cell = counts.at(0, 0);
    REQUIRE(cell.n1 == 0);
    REQUIRE(cell.n0 > 0);
  }
}

TEST_CASE("table estimation", "[sampling]") {
  SECTION("binomial arithmetic") {
    CountTable counts;
    counts.n_prep = 1;
    counts.n_meas = 1;
    counts.shots_per_setting = 100;
    counts.cells = {{50, 50, 0}};
    const ProbTable t = estimate_table(counts);
    REQUIRE(t.p(0, 0) == 0.5);
    REQUIRE(t.provenance == ProbTable::Provenance::sampled);
    REQUIRE((*t.std_errors)(0, 0) == Approx(0.05).margin(1e-12));
  }

  SECTION("zero detections fail") {
    CountTable counts;
    counts.n_prep = 1;
    counts.n_meas = 1;
    counts.shots_per_setting = 10;
    counts.cells = {{0, 0, 10}};
    REQUIRE_THROWS_AS(estimate_table(counts), EstimationError);
  }

  SECTION("post-selection keeps heavy loss unbiased") {
    const PamSettings settings{{0.4}, {0.4}, kPi / 4.0};  // p = 1
    const NoiseConfig noise{1000000, 0.9, 1.0, 558};
    const ProbTable t = estimate_table(sample_counts(settings, noise));
    const double se = (*t.std_errors)(0, 0);
    REQUIRE(std::abs(t.p(0, 0) - 1.0) <= 5.0 * se + 1e-15);
  }
}

TEST_CASE("witness estimation under loss", "[sampling]") {
  const PamSettings settings = max_violation_settings();
  const double target = 1.0 + 2.0 * std::sqrt(2.0);

  SECTION("heavy loss, many shots") {
    const NoiseConfig noise{1000000, 0.5, 1.0, 20240101};
    const WitnessResult r = estimate_witness(WitnessKind::linear_idw, settings, noise);
    REQUIRE(r.std_error.has_value());
    REQUIRE(std::abs(r.value - target) < 5.0 * *r.std_error);
  }

  SECTION("estimates converge over 100 seeds") {
    int within = 0;
    for (int seed = 0; seed < 100; ++seed) {
      const NoiseConfig noise{10000000, 0.0, 1.0, 7000 + static_cast<uint64_t>(seed)};
      const WitnessResult r = estimate_witness(WitnessKind::linear_idw, settings, noise);
      if (std::abs(r.value - target) < 4.0 * *r.std_error) ++within;
    }
    REQUIRE(within >= 99);
  }

  SECTION("uncertainty shrinks with more shots") {
    const WitnessResult small =
        estimate_witness(WitnessKind::linear_idw, settings, {100, 0.0, 1.0, 42});
    const WitnessResult large =
        estimate_witness(WitnessKind::linear_idw, settings, {1000000, 0.0, 1.0, 42});
    REQUIRE(*small.std_error > *large.std_error);
  }

  SECTION("loss acts only through the detected sample size") {
    // same expected number of detected events with and without loss
    double sum_lossless = 0.0, sum_lossy = 0.0;
    double var_lossless = 0.0, var_lossy = 0.0;
    const int runs = 200;
    for (int seed = 0; seed < runs; ++seed) {
      const WitnessResult a = estimate_witness(
          WitnessKind::linear_idw, settings, {20000, 0.0, 1.0, 100 + static_cast<uint64_t>(seed)});
      const WitnessResult b = estimate_witness(
          WitnessKind::linear_idw, settings, {100000, 0.8, 1.0, 900 + static_cast<uint64_t>(seed)});
      sum_lossless += a.value;
      sum_lossy += b.value;
      var_lossless += *a.std_error * *a.std_error;
      var_lossy += *b.std_error * *b.std_error;
    }
    const double mean_diff = (sum_lossless - sum_lossy) / runs;
    const double se_diff = std::sqrt((var_lossless + var_lossy) / (runs * runs));
    REQUIRE(std::abs(mean_diff) < 4.0 * se_diff);
  }

  SECTION("delta and bootstrap uncertainties agree") {
    const NoiseConfig noise{200000, 0.2, 0.9, 777};
    const WitnessResult delta =
        estimate_witness(WitnessKind::linear_idw, settings, noise);
    const WitnessResult boot = estimate_witness(
        WitnessKind::linear_idw, settings, noise, UncertaintyMethod::bootstrap, 1000);
    REQUIRE(*boot.std_error == Approx(*delta.std_error).epsilon(0.25));

    const PamSettings det_settings =
        SettingFamily::defaults(WitnessKind::nonlinear_det).instantiate(0.9, kPi / 5.0);
    const WitnessResult ddelta =
        estimate_witness(WitnessKind::nonlinear_det, det_settings, noise);
    const WitnessResult dboot = estimate_witness(
        WitnessKind::nonlinear_det, det_settings, noise, UncertaintyMethod::bootstrap, 1000);
    REQUIRE(*dboot.std_error == Approx(*ddelta.std_error).epsilon(0.25));
  }
}

TEST_CASE("post-selected estimator is unbiased under loss", "[sampling][property]") {
  const PamSettings settings{{0.7}, {0.0}, kPi / 5.0};
  const double analytic = oracle::intensity(kPi / 5.0, 0.7);
  for (double loss : {0.0, 0.3, 0.8}) {
    double sum = 0.0, sumsq = 0.0;
    const int runs = 200;
    for (int seed = 0; seed < runs; ++seed) {
      const NoiseConfig noise{100000, loss, 1.0, 4000 + static_cast<uint64_t>(seed)};
      const ProbTable t = estimate_table(sample_counts(settings, noise));
      sum += t.p(0, 0);
      sumsq += t.p(0, 0) * t.p(0, 0);
    }
    const double mean = sum / runs;
    const double sd = std::sqrt((sumsq - runs * mean * mean) / (runs - 1));
    const double se_of_mean = sd / std::sqrt(static_cast<double>(runs));
    REQUIRE(std::abs(mean - analytic) < 4.0 * se_of_mean);
  }
}

TEST_CASE("nominal 95% intervals cover", "[sampling][property]") {
  // 1000 seeded cells; coverage of p-hat +- 1.96 se should land in [93%, 97%]
  const PamSettings settings{{0.7}, {0.0}, kPi / 5.0};
  const double analytic = oracle::intensity(kPi / 5.0, 0.7);
  int covered = 0;
  for (int seed = 0; seed < 1000; ++seed) {
    const NoiseConfig noise{20000, 0.2, 0.9, 50000 + static_cast<uint64_t>(seed)};
    const ProbTable t = estimate_table(sample_counts(settings, noise));
    const double se = (*t.std_errors)(0, 0);
    if (std::abs(t.p(0, 0) - analytic) <= 1.96 * se) ++covered;
  }
  REQUIRE(covered >= 930);
  REQUIRE(covered <= 970);
}

TEST_CASE("stream derivation separates cells", "[sampling]") {
  REQUIRE(derive_stream_seed(1, 0, 0) != derive_stream_seed(1, 0, 1));
  REQUIRE(derive_stream_seed(1, 0, 0) != derive_stream_seed(1, 1, 0));
  REQUIRE(derive_stream_seed(1, 0, 0) != derive_stream_seed(2, 0, 0));
  REQUIRE(derive_stream_seed(1, 2, 3) == derive_stream_seed(1, 2, 3));
}
