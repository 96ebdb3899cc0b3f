#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qdc/witness.hpp"

namespace qdc {

/// Raised when an enumeration request exceeds the 10^7 strategy guard.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic prepare-and-measure strategy over a d-letter message
/// alphabet: the preparer maps setting x to a message, the measurer maps
/// (message, setting y) to the binary outcome.
struct ClassicalStrategy {
  int dim = 2;
  std::vector<int> prep;          // x -> message in [0, dim)
  std::vector<uint8_t> response;  // (m, y) -> outcome, at index m * n_meas + y

  int n_preparations() const { return static_cast<int>(prep.size()); }
  int n_measurements() const {
    return dim == 0 ? 0 : static_cast<int>(response.size()) / dim;
  }
};

/// Convex mixture of deterministic strategies (shared randomness).
struct MixedStrategy {
  std::vector<double> weights;
  std::vector<ClassicalStrategy> components;

  /// Checks matching lengths, positive weights, and sum 1 within 1e-12.
  static MixedStrategy make(std::vector<double> weights,
                            std::vector<ClassicalStrategy> components);
};

/// d^n_prep * 2^(d * n_meas); the value every enumeration is guarded by.
/// Returns a saturating value > the guard on overflow.
long long strategy_count(int n_prep, int n_meas, int d);

inline constexpr long long kEnumerationGuard = 10'000'000;

/// The idx-th strategy in the fixed enumeration order (preparation map is
/// the little-endian base-d digits of idx / 2^(d n_meas), response map the
/// bits of idx mod 2^(d n_meas)).
ClassicalStrategy strategy_from_index(long long idx, int n_prep, int n_meas, int d);

/// All deterministic strategies. Throws EnumerationLimitError past the guard.
std::vector<ClassicalStrategy> enumerate_strategies(int n_prep, int n_meas, int d);

/// Probability table of a strategy: entries in {0, 1} for deterministic
/// strategies, convex combinations for mixtures. Throws
/// std::invalid_argument when the strategy does not cover (n_prep, n_meas).
ProbTable strategy_table(const ClassicalStrategy& s, int n_prep, int n_meas);
ProbTable strategy_table(const MixedStrategy& s, int n_prep, int n_meas);

/// Maximum witness value over every deterministic strategy plus
/// n_random_mixtures seeded random convex mixtures.
///
/// Mixture sampling follows the independence structure each witness assumes:
/// the linear witness is affine in the table, so arbitrary joint mixtures
/// are sampled; the determinant witness presumes uncorrelated preparer and
/// measurer randomness, so its mixtures draw an independent preparation-side
/// and response-side mixture (2-8 components each, Dirichlet(1) weights).
double classical_max(WitnessKind kind, int n_prep, int n_meas, int d,
                     int n_random_mixtures, uint64_t seed);

}  // namespace qdc
