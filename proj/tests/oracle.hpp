#pragma once

// Test-side oracles: the final-state and witness expressions written out
// directly, kept independent of the circuit-composition and table-evaluation
// paths they are used to check.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qdc/state.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
inline constexpr Complex kI{0.0, 1.0};

inline Complex phase(double value) { return std::polar(1.0, value); }

// (|0> - e^{i p}|1>)/sqrt2
inline Eigen::VectorXcd particle(double p) {
  Eigen::VectorXcd v(2);
  v << kInvSqrt2, -phase(p) * kInvSqrt2;
  return v;
}

// e^{i p/2} (cos(p/2)|0> - i sin(p/2)|1>)
inline Eigen::VectorXcd wave(double p) {
  Eigen::VectorXcd v(2);
  v << phase(p / 2) * std::cos(p / 2), phase(p / 2) * (-kI) * std::sin(p / 2);
  return v;
}

// Final 2-path amplitudes (e^{i m} cos t + e^{i f} sin t,
//                          e^{i m} sin t - e^{i f} cos t) / sqrt2.
inline Eigen::VectorXcd qdc_final(double t, double f, double m = 0.0) {
  Eigen::VectorXcd v(2);
  v << kInvSqrt2 * (phase(m) * std::cos(t) + phase(f) * std::sin(t)),
      kInvSqrt2 * (phase(m) * std::sin(t) - phase(f) * std::cos(t));
  return v;
}

// Unnormalized splitter output pair (cos t + e^{i f} sin t, sin t - e^{i f} cos t).
inline Eigen::Vector2cd pair_raw(double t, double f) {
  return {std::cos(t) + phase(f) * std::sin(t), std::sin(t) - phase(f) * std::cos(t)};
}

// Product state over pol x 2 paths, index = pol * 2 + path.
inline Eigen::VectorXcd hybrid_final(double pol_rot, double t, double path_phase,
                                     double pol_phase) {
  const Eigen::Vector2cd pol = pair_raw(pol_rot, pol_phase);
  const Eigen::Vector2cd path = pair_raw(t, path_phase);
  Eigen::VectorXcd v(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) v(a * 2 + b) = 0.5 * pol(a) * path(b);
  return v;
}

// Two-block superposition over pol x 4 paths, block A on arms {0,2},
// block B on arms {1,3}, index = pol * 4 + path.
inline Eigen::VectorXcd entangler_final(double rot_a, double rot_b, double t_a,
                                        double t_b, double path_phase,
                                        double pol_phase) {
  const Eigen::Vector2cd pol_a = pair_raw(rot_a, pol_phase);
  const Eigen::Vector2cd pol_b = pair_raw(rot_b, pol_phase);
  const Eigen::Vector2cd path_a = pair_raw(t_a, path_phase);
  const Eigen::Vector2cd path_b = pair_raw(t_b, path_phase);
  const double scale = 1.0 / (2.0 * std::sqrt(2.0));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  for (int pol = 0; pol < 2; ++pol) {
    v(pol * 4 + 0) = scale * pol_a(pol) * path_a(0);
    v(pol * 4 + 2) = scale * pol_a(pol) * path_a(1);
    v(pol * 4 + 1) = scale * pol_b(pol) * path_b(0);
    v(pol * 4 + 3) = scale * pol_b(pol) * path_b(1);
  }
  return v;
}

// P(detector 0) = (1 + sin 2t cos f)/2 with f the net phase difference.
inline double intensity(double t, double f) {
  return 0.5 * (1.0 + std::sin(2.0 * t) * std::cos(f));
}

// sin 2t (2 (cos f + sin f) + 1)
inline double idw_family(double f, double t) {
  return std::sin(2.0 * t) * (2.0 * (std::cos(f) + std::sin(f)) + 1.0);
}

// sin^2(2t)/4 (2 sin 2f - sin f - sin 3f), signed
inline double det_family(double f, double t) {
  const double s = std::sin(2.0 * t);
  return 0.25 * s * s * (2.0 * std::sin(2.0 * f) - std::sin(f) - std::sin(3.0 * f));
}

inline double det_general(const std::vector<double>& prep,
                          const std::vector<double>& meas, double t) {
  auto c = [&](int x, int y) { return std::cos(prep[x] - meas[y]); };
  const double s = std::sin(2.0 * t);
  return 0.25 * s * s *
         ((c(0, 0) - c(1, 0)) * (c(2, 1) - c(3, 1)) -
          (c(2, 0) - c(3, 0)) * (c(0, 1) - c(1, 1)));
}

inline double idw_general(const std::vector<double>& prep,
                          const std::vector<double>& meas, double t) {
  auto c = [&](int x, int y) { return std::cos(prep[x] - meas[y]); };
  return std::sin(2.0 * t) * (c(0, 0) + c(0, 1) + c(1, 0) - c(1, 1) - c(2, 0));
}

// Purity route for the entanglement across the pol | path cut:
// sqrt(2 (1 - tr rho_pol^2)) from the reduced polarization state.
inline double purity_concurrence(const Eigen::VectorXcd& amps, int path_dim) {
  Eigen::MatrixXcd m(2, path_dim);
  for (int pol = 0; pol < 2; ++pol)
    for (int path = 0; path < path_dim; ++path) m(pol, path) = amps(pol * path_dim + path);
  const Eigen::Matrix2cd rho = m * m.adjoint();
  const double purity = (rho * rho).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

// Largest elementwise |difference| between a state and reference amplitudes,
// after rotating each so its largest-magnitude entry is real positive.
inline Eigen::VectorXcd aligned(Eigen::VectorXcd v) {
  int pivot = 0;
  for (int i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(pivot)) + 1e-15) pivot = i;
  const double mag = std::abs(v(pivot));
  if (mag > 0) v *= std::conj(v(pivot)) / mag;
  return v;
}

inline double state_diff_up_to_phase(const qdc::PureState& s, const Eigen::VectorXcd& ref) {
  const Eigen::VectorXcd a = aligned(s.amplitudes());
  const Eigen::VectorXcd b = aligned(ref / ref.norm());
  return (a - b).cwiseAbs().maxCoeff();
}

inline double state_diff(const qdc::PureState& s, const Eigen::VectorXcd& ref) {
  return (s.amplitudes() - ref / ref.norm()).cwiseAbs().maxCoeff();
}

}  // namespace oracle
