#include "qdc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace qdc {

namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr uint64_t kBootstrapSalt = 0x626f6f7473747261ULL;

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long draw_binomial(SplitMix64& rng, long long trials, double p) {
  if (trials <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<long long> binom(trials, p);
  return binom(rng);
}

/// Cofactor matrix of a small square matrix, via minors. Fine for the k <= 4
/// witness matrices this library ever sees.
Eigen::MatrixXd cofactors(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXd c(n, n);
  if (n == 1) {
    c(0, 0) = 1.0;
    return c;
  }
  Eigen::MatrixXd minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int col = 0, mc = 0; col < n; ++col) {
          if (col == j) continue;
          minor(mr, mc++) = m(r, col);
        }
        ++mr;
      }
      const double det =
          n == 2 ? minor(0, 0) : Eigen::FullPivLU<Eigen::MatrixXd>(minor).determinant();
      c(i, j) = ((i + j) % 2 == 0 ? 1.0 : -1.0) * det;
    }
  return c;
}

}  // namespace

uint64_t derive_stream_seed(uint64_t master, uint64_t a, uint64_t b) {
  uint64_t s = mix64(master + kGolden);
  s = mix64(s ^ (kGolden * (a + 1)));
  s = mix64(s ^ (kGolden * (b + 1)));
  return s;
}

void NoiseConfig::validate() const {
  if (shots_per_setting < 1)
    throw std::invalid_argument("shots_per_setting must be >= 1");
  if (!(loss >= 0.0 && loss < 1.0))
    throw std::invalid_argument("loss must lie in [0, 1)");
  if (!(efficiency > 0.0 && efficiency <= 1.0))
    throw std::invalid_argument("efficiency must lie in (0, 1]");
}

CountTable sample_counts(const PamSettings& settings, const NoiseConfig& noise) {
  noise.validate();
  const ProbTable analytic = prob_table(settings);
  const int nx = analytic.n_preparations();
  const int ny = analytic.n_measurements();
  const double p_detect = (1.0 - noise.loss) * noise.efficiency;

  CountTable counts;
  counts.n_prep = nx;
  counts.n_meas = ny;
  counts.shots_per_setting = noise.shots_per_setting;
  counts.cells.resize(static_cast<size_t>(nx) * ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      SplitMix64 rng(derive_stream_seed(noise.seed, static_cast<uint64_t>(x),
                                        static_cast<uint64_t>(y)));
      const long long detected = draw_binomial(rng, noise.shots_per_setting, p_detect);
      const double p = std::clamp(analytic.p(x, y), 0.0, 1.0);
      CellCounts& cell = counts.at(x, y);
      cell.n0 = draw_binomial(rng, detected, p);
      cell.n1 = detected - cell.n0;
      cell.n_lost = noise.shots_per_setting - detected;
    }
  return counts;
}

ProbTable estimate_table(const CountTable& counts) {
  ProbTable t;
  t.p.resize(counts.n_prep, counts.n_meas);
  Eigen::MatrixXd errors(counts.n_prep, counts.n_meas);
  for (int x = 0; x < counts.n_prep; ++x)
    for (int y = 0; y < counts.n_meas; ++y) {
      const CellCounts& cell = counts.at(x, y);
      const long long detected = cell.n0 + cell.n1;
      if (detected < 1)
        throw EstimationError("no detected events in cell (" + std::to_string(x) +
                              ", " + std::to_string(y) + ")");
      const double p = static_cast<double>(cell.n0) / static_cast<double>(detected);
      t.p(x, y) = p;
      errors(x, y) = std::sqrt(p * (1.0 - p) / static_cast<double>(detected));
    }
  t.provenance = ProbTable::Provenance::sampled;
  t.std_errors = std::move(errors);
  return t;
}

WitnessResult witness_with_uncertainty(WitnessKind kind, const ProbTable& table) {
  if (!table.std_errors)
    throw std::invalid_argument("table carries no standard errors");
  const Eigen::MatrixXd& se = *table.std_errors;

  WitnessResult result =
      kind == WitnessKind::nonlinear_det ? nonlinear_witness(table) : linear_witness(table);

  double variance = 0.0;
  if (kind == WitnessKind::linear_idw) {
    // d<Dxy>/dp = 2 on each of the five cells.
    const int cells[5][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}};
    for (const auto& c : cells) variance += 4.0 * se(c[0], c[1]) * se(c[0], c[1]);
  } else {
    // Delta method through the determinant: d det / dW(i,j) is the cofactor,
    // and p(x, y) enters W(y, x/2) with sign (-1)^x.
    const Eigen::MatrixXd cof = cofactors(*result.witness_matrix);
    for (int x = 0; x < table.n_preparations(); ++x)
      for (int y = 0; y < table.n_measurements(); ++y) {
        const double d = cof(y, x / 2);
        variance += d * d * se(x, y) * se(x, y);
      }
  }
  result.std_error = std::sqrt(variance);
  return result;
}

WitnessResult estimate_witness(WitnessKind kind, const PamSettings& settings,
                               const NoiseConfig& noise, UncertaintyMethod method,
                               int bootstrap_resamples) {
  const CountTable counts = sample_counts(settings, noise);
  const ProbTable table = estimate_table(counts);
  WitnessResult result = witness_with_uncertainty(kind, table);
  result.settings = settings;

  if (method == UncertaintyMethod::bootstrap) {
    if (bootstrap_resamples < 2)
      throw std::invalid_argument("bootstrap needs at least 2 resamples");
    std::vector<double> values(bootstrap_resamples);
    ProbTable resampled = table;
    for (int r = 0; r < bootstrap_resamples; ++r) {
      SplitMix64 rng(derive_stream_seed(noise.seed ^ kBootstrapSalt,
                                        static_cast<uint64_t>(r), 0));
      for (int x = 0; x < counts.n_prep; ++x)
        for (int y = 0; y < counts.n_meas; ++y) {
          const CellCounts& cell = counts.at(x, y);
          const long long detected = cell.n0 + cell.n1;
          const long long n0 = draw_binomial(rng, detected, table.p(x, y));
          resampled.p(x, y) = static_cast<double>(n0) / static_cast<double>(detected);
        }
      values[r] = (kind == WitnessKind::nonlinear_det ? nonlinear_witness(resampled)
                                                      : linear_witness(resampled))
                      .value;
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= values.size();
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    result.std_error = std::sqrt(ss / (values.size() - 1));
  }
  return result;
}

}  // namespace qdc
