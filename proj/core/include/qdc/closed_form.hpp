#pragma once

#include "qdc/circuits.hpp"
#include "qdc/witness.hpp"

namespace qdc::closed_form {

/// Direct closed-form expressions for the circuit outputs and witness
/// values. These are evaluated independently of the element-by-element
/// simulation and back the tool's internal cross-checks: every CLI run
/// compares both routes and fails loudly if they drift apart.

/// Final amplitudes of the single-DOF interferometer,
///   ( e^{i meas} cos t + e^{i prep} sin t,
///     e^{i meas} sin t - e^{i prep} cos t ) / sqrt2.
CVector qdc_amplitudes(const QdcParams& p);

/// Product of the polarization and path interferometer factors.
CVector hybrid_amplitudes(const HybridParams& p);

/// Two-block superposition over arms {0,2} and {1,3}.
CVector entangler_amplitudes(const EntanglerParams& p);

/// P(detector 0) = (1 + sin(2 t) cos(prep - meas)) / 2.
double detection_probability(double tbs_angle, double prep_phase, double meas_phase);

/// Signed determinant of the 2x2 witness matrix for arbitrary settings
/// (4 preparations, 2 measurements): the product-difference expansion in
/// cos(prep - meas), scaled by sin^2(2 t)/4.
double nonlinear_det(const PamSettings& settings);

/// Same, for the default coefficient family {phi, 2phi, 3phi, 4phi} with
/// measurements {0, pi/2}:
///   sin^2(2 t)/4 * (2 sin 2phi - sin phi - sin 3phi).
double nonlinear_det_family(double phi, double tbs_angle);

/// Linear witness for arbitrary settings (>= 3 preparations, >= 2
/// measurements): sin(2 t) times the five-term cosine combination.
double linear_idw(const PamSettings& settings);

/// Same, for the default family {phi, -phi, pi} with measurements
/// {0, pi/2}: sin(2 t) (2 (cos phi + sin phi) + 1).
double linear_idw_family(double phi, double tbs_angle);

}  // namespace qdc::closed_form
