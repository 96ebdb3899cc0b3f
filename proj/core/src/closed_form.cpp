#include "qdc/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace qdc::closed_form {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// The two output amplitudes of one tunable-splitter interferometer arm
/// pair, unnormalized: (cos t + e^{i phase} sin t, sin t - e^{i phase} cos t).
Eigen::Vector2cd splitter_pair(double angle, double phase) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Complex e = std::polar(1.0, phase);
  return {c + e * s, s - e * c};
}

}  // namespace

CVector qdc_amplitudes(const QdcParams& p) {
  const Complex em = std::polar(1.0, p.meas_phase);
  const Complex ep = std::polar(1.0, p.prep_phase);
  const double c = std::cos(p.tbs_angle);
  const double s = std::sin(p.tbs_angle);
  CVector v(2);
  v(0) = kInvSqrt2 * (em * c + ep * s);
  v(1) = kInvSqrt2 * (em * s - ep * c);
  return v;
}

CVector hybrid_amplitudes(const HybridParams& p) {
  const Eigen::Vector2cd pol = splitter_pair(p.pol_rotation, p.pol_phase);
  const Eigen::Vector2cd path = splitter_pair(p.tbs_angle, p.path_phase);
  CVector v(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) v(a * 2 + b) = 0.5 * pol(a) * path(b);
  return v;
}

CVector entangler_amplitudes(const EntanglerParams& p) {
  const Eigen::Vector2cd pol_a = splitter_pair(p.pol_rotation_a, p.pol_phase);
  const Eigen::Vector2cd pol_b = splitter_pair(p.pol_rotation_b, p.pol_phase);
  const Eigen::Vector2cd path_a = splitter_pair(p.tbs_angle_a, p.path_phase);
  const Eigen::Vector2cd path_b = splitter_pair(p.tbs_angle_b, p.path_phase);
  const double scale = 1.0 / (2.0 * std::sqrt(2.0));
  CVector v = CVector::Zero(8);
  for (int pol = 0; pol < 2; ++pol) {
    v(pol * 4 + 0) = scale * pol_a(pol) * path_a(0);
    v(pol * 4 + 2) = scale * pol_a(pol) * path_a(1);
    v(pol * 4 + 1) = scale * pol_b(pol) * path_b(0);
    v(pol * 4 + 3) = scale * pol_b(pol) * path_b(1);
  }
  return v;
}

double detection_probability(double tbs_angle, double prep_phase, double meas_phase) {
  return 0.5 * (1.0 + std::sin(2.0 * tbs_angle) * std::cos(prep_phase - meas_phase));
}

double nonlinear_det(const PamSettings& settings) {
  if (settings.preparation_phases.size() != 4 || settings.measurement_phases.size() != 2)
    throw std::invalid_argument("closed-form determinant needs 4 preparations and 2 measurements");
  const auto& prep = settings.preparation_phases;
  const auto& meas = settings.measurement_phases;
  auto c = [&](int x, int y) { return std::cos(prep[x] - meas[y]); };
  const double s2 = std::sin(2.0 * settings.tbs_angle);
  return 0.25 * s2 * s2 *
         ((c(0, 0) - c(1, 0)) * (c(2, 1) - c(3, 1)) -
          (c(2, 0) - c(3, 0)) * (c(0, 1) - c(1, 1)));
}

double nonlinear_det_family(double phi, double tbs_angle) {
  const double s2 = std::sin(2.0 * tbs_angle);
  return 0.25 * s2 * s2 *
         (2.0 * std::sin(2.0 * phi) - std::sin(phi) - std::sin(3.0 * phi));
}

double linear_idw(const PamSettings& settings) {
  if (settings.preparation_phases.size() < 3 || settings.measurement_phases.size() < 2)
    throw std::invalid_argument("closed-form linear witness needs >= 3 preparations and >= 2 measurements");
  const auto& prep = settings.preparation_phases;
  const auto& meas = settings.measurement_phases;
  auto c = [&](int x, int y) { return std::cos(prep[x] - meas[y]); };
  return std::sin(2.0 * settings.tbs_angle) *
         (c(0, 0) + c(0, 1) + c(1, 0) - c(1, 1) - c(2, 0));
}

double linear_idw_family(double phi, double tbs_angle) {
  return std::sin(2.0 * tbs_angle) * (2.0 * (std::cos(phi) + std::sin(phi)) + 1.0);
}

}  // namespace qdc::closed_form
