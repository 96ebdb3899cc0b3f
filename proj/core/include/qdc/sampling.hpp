#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qdc/witness.hpp"

namespace qdc {

/// SplitMix64: splittable 64-bit generator (Steele/Lea/Flood). Used both as
/// the per-cell stream generator and to derive independent stream seeds, so
/// sampling stays deterministic under any cell evaluation order.
class SplitMix64 {
 public:
  using result_type = uint64_t;

  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }

  result_type operator()() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

/// Seed of the independent stream (a, b) split off a master seed.
uint64_t derive_stream_seed(uint64_t master, uint64_t a, uint64_t b);

/// Loss/inefficiency model: each shot is discarded with probability
/// loss + (1 - loss)(1 - efficiency), independent of the outcome; surviving
/// shots click detector 0 with the analytic cell probability.
struct NoiseConfig {
  long long shots_per_setting = 1;
  double loss = 0.0;        // in [0, 1)
  double efficiency = 1.0;  // in (0, 1]
  uint64_t seed = 0;

  void validate() const;
};

struct CellCounts {
  long long n0 = 0;
  long long n1 = 0;
  long long n_lost = 0;
};

struct CountTable {
  int n_prep = 0;
  int n_meas = 0;
  long long shots_per_setting = 0;
  std::vector<CellCounts> cells;  // x * n_meas + y

  const CellCounts& at(int x, int y) const { return cells.at(x * n_meas + y); }
  CellCounts& at(int x, int y) { return cells.at(x * n_meas + y); }
};

/// Draws the per-cell counts. Cells use independent derived streams, and
/// identical configs produce bit-identical tables.
CountTable sample_counts(const PamSettings& settings, const NoiseConfig& noise);

/// Raised when a cell has zero detected events and no estimate exists.
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Post-selected estimate p = n0/(n0+n1) with binomial standard errors;
/// conditioning on detection makes it target the lossless probabilities.
ProbTable estimate_table(const CountTable& counts);

enum class UncertaintyMethod { delta, bootstrap };

/// Samples a table and evaluates the witness on it. Uncertainty by
/// first-order propagation through the witness (exact for the linear kind,
/// delta method through the determinant cofactors otherwise); bootstrap
/// resampling of the detected events is available for cross-checking.
WitnessResult estimate_witness(WitnessKind kind, const PamSettings& settings,
                               const NoiseConfig& noise,
                               UncertaintyMethod method = UncertaintyMethod::delta,
                               int bootstrap_resamples = 1000);

/// Same, for a table that has already been estimated (must carry errors).
WitnessResult witness_with_uncertainty(WitnessKind kind, const ProbTable& table);

}  // namespace qdc
