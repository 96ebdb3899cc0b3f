#include "qdc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "qdc/sampling.hpp"

namespace qdc {

namespace {

void require_shape(int n_prep, int n_meas, int d) {
  if (n_prep < 1 || n_meas < 1 || d < 1)
    throw std::invalid_argument("strategy shape must have n_prep, n_meas, d >= 1");
}

long long checked_count(int n_prep, int n_meas, int d) {
  const long long count = strategy_count(n_prep, n_meas, d);
  if (count > kEnumerationGuard)
    throw EnumerationLimitError("strategy space of " + std::to_string(count) +
                                " exceeds the enumeration guard of " +
                                std::to_string(kEnumerationGuard));
  return count;
}

double evaluate(WitnessKind kind, const ProbTable& t) {
  return (kind == WitnessKind::nonlinear_det ? nonlinear_witness(t) : linear_witness(t))
      .value;
}

/// Dirichlet(1, ..., 1) weights: normalized unit exponentials.
std::vector<double> dirichlet_weights(int n, SplitMix64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - uniform(rng));
    total += v;
  }
  for (double& v : w) v /= total;
  return w;
}

long long power_ll(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > kEnumerationGuard) return out;  // caller guards anyway
    out *= base;
  }
  return out;
}

}  // namespace

long long strategy_count(int n_prep, int n_meas, int d) {
  require_shape(n_prep, n_meas, d);
  // log-space overflow guard before any multiplication
  const double log_count = n_prep * std::log2(static_cast<double>(d)) +
                           static_cast<double>(d) * n_meas;
  if (log_count > 62.0) return std::numeric_limits<long long>::max();
  long long count = 1;
  for (int i = 0; i < n_prep; ++i) count *= d;
  return count << (static_cast<long long>(d) * n_meas);
}

ClassicalStrategy strategy_from_index(long long idx, int n_prep, int n_meas, int d) {
  require_shape(n_prep, n_meas, d);
  const long long response_count = 1LL << (static_cast<long long>(d) * n_meas);
  ClassicalStrategy s;
  s.dim = d;
  s.prep.resize(n_prep);
  s.response.resize(static_cast<size_t>(d) * n_meas);
  long long prep_idx = idx / response_count;
  long long resp_idx = idx % response_count;
  for (int x = 0; x < n_prep; ++x) {
    s.prep[x] = static_cast<int>(prep_idx % d);
    prep_idx /= d;
  }
  for (size_t i = 0; i < s.response.size(); ++i)
    s.response[i] = static_cast<uint8_t>((resp_idx >> i) & 1);
  return s;
}

std::vector<ClassicalStrategy> enumerate_strategies(int n_prep, int n_meas, int d) {
  const long long count = checked_count(n_prep, n_meas, d);
  std::vector<ClassicalStrategy> out;
  out.reserve(static_cast<size_t>(count));
  for (long long idx = 0; idx < count; ++idx)
    out.push_back(strategy_from_index(idx, n_prep, n_meas, d));
  return out;
}

MixedStrategy MixedStrategy::make(std::vector<double> weights,
                                  std::vector<ClassicalStrategy> components) {
  if (weights.empty() || weights.size() != components.size())
    throw std::invalid_argument("mixture needs matching, nonempty weights and components");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("mixture weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("mixture weights must sum to 1 (got " +
                                std::to_string(total) + ")");
  MixedStrategy m;
  m.weights = std::move(weights);
  m.components = std::move(components);
  return m;
}

ProbTable strategy_table(const ClassicalStrategy& s, int n_prep, int n_meas) {
  require_shape(n_prep, n_meas, s.dim);
  if (s.n_preparations() != n_prep || s.n_measurements() != n_meas)
    throw std::invalid_argument("strategy covers " + std::to_string(s.n_preparations()) +
                                " x " + std::to_string(s.n_measurements()) +
                                " settings, requested " + std::to_string(n_prep) + " x " +
                                std::to_string(n_meas));
  ProbTable t;
  t.p.resize(n_prep, n_meas);
  for (int x = 0; x < n_prep; ++x) {
    const int m = s.prep[x];
    if (m < 0 || m >= s.dim)
      throw std::invalid_argument("preparation maps to message " + std::to_string(m) +
                                  " outside the alphabet of size " + std::to_string(s.dim));
    for (int y = 0; y < n_meas; ++y)
      t.p(x, y) = s.response[static_cast<size_t>(m) * n_meas + y] == 0 ? 1.0 : 0.0;
  }
  t.provenance = ProbTable::Provenance::analytic;
  return t;
}

ProbTable strategy_table(const MixedStrategy& s, int n_prep, int n_meas) {
  if (s.components.empty()) throw std::invalid_argument("empty mixture");
  ProbTable t;
  t.p = Eigen::MatrixXd::Zero(n_prep, n_meas);
  for (size_t i = 0; i < s.components.size(); ++i)
    t.p += s.weights[i] * strategy_table(s.components[i], n_prep, n_meas).p;
  t.provenance = ProbTable::Provenance::analytic;
  return t;
}

double classical_max(WitnessKind kind, int n_prep, int n_meas, int d,
                     int n_random_mixtures, uint64_t seed) {
  const long long count = checked_count(n_prep, n_meas, d);

  double best = -std::numeric_limits<double>::infinity();
  for (long long idx = 0; idx < count; ++idx) {
    const ProbTable t = strategy_table(strategy_from_index(idx, n_prep, n_meas, d),
                                       n_prep, n_meas);
    best = std::max(best, evaluate(kind, t));
  }
  if (n_random_mixtures <= 0) return best;

  const long long prep_count = power_ll(d, n_prep);
  const long long response_count = 1LL << (static_cast<long long>(d) * n_meas);
  SplitMix64 rng(derive_stream_seed(seed, 0x6d69784dULL, static_cast<uint64_t>(count)));
  std::uniform_int_distribution<int> n_components(2, 8);
  std::uniform_int_distribution<long long> any_strategy(0, count - 1);
  std::uniform_int_distribution<long long> any_prep(0, prep_count - 1);
  std::uniform_int_distribution<long long> any_response(0, response_count - 1);

  for (int i = 0; i < n_random_mixtures; ++i) {
    ProbTable t;
    t.p = Eigen::MatrixXd::Zero(n_prep, n_meas);
    if (kind == WitnessKind::linear_idw) {
      // Affine witness: arbitrary shared randomness between the boxes.
      const int n = n_components(rng);
      const std::vector<double> w = dirichlet_weights(n, rng);
      for (int c = 0; c < n; ++c) {
        const auto strat = strategy_from_index(any_strategy(rng), n_prep, n_meas, d);
        t.p += w[c] * strategy_table(strat, n_prep, n_meas).p;
      }
    } else {
      // The determinant witness presumes independent preparer and measurer
      // randomness, so the two sides are mixed independently.
      const int np = n_components(rng);
      const std::vector<double> wp = dirichlet_weights(np, rng);
      std::vector<long long> preps(np);
      for (auto& v : preps) v = any_prep(rng);
      const int nm = n_components(rng);
      const std::vector<double> wm = dirichlet_weights(nm, rng);
      std::vector<long long> responses(nm);
      for (auto& v : responses) v = any_response(rng);
      for (int a = 0; a < np; ++a)
        for (int b = 0; b < nm; ++b) {
          const long long idx = preps[a] * response_count + responses[b];
          const auto strat = strategy_from_index(idx, n_prep, n_meas, d);
          t.p += wp[a] * wm[b] * strategy_table(strat, n_prep, n_meas).p;
        }
    }
    best = std::max(best, evaluate(kind, t));
  }
  return best;
}

}  // namespace qdc
