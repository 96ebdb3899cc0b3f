#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qdc/circuits.hpp"

namespace qdc {

enum class WitnessKind { nonlinear_det, linear_idw };

/// Prepare-and-measure settings: the preparer picks a phase from
/// `preparation_phases`, the measurer picks one from `measurement_phases`;
/// the tbs angle is common to all runs.
struct PamSettings {
  std::vector<double> preparation_phases;
  std::vector<double> measurement_phases;
  double tbs_angle = 0.0;
};

/// p(x, y) = P(detector 0 clicks | preparation x, measurement y).
struct ProbTable {
  enum class Provenance { analytic, sampled };

  Eigen::MatrixXd p;  // n_prep rows, n_meas cols
  Provenance provenance = Provenance::analytic;
  std::optional<Eigen::MatrixXd> std_errors;  // per cell, sampled tables only

  int n_preparations() const { return static_cast<int>(p.rows()); }
  int n_measurements() const { return static_cast<int>(p.cols()); }
};

/// Builds the table by running the interferometer state for every (x, y)
/// cell and reading detect_prob at path 0.
ProbTable prob_table(const PamSettings& settings);

struct WitnessResult {
  WitnessKind kind = WitnessKind::linear_idw;
  double value = 0.0;
  std::optional<Eigen::MatrixXd> witness_matrix;  // W for the determinant kind
  PamSettings settings;
  std::optional<double> std_error;  // set by the sampled estimators
};

/// |det W_k| with W_k(i, j) = p(2j, i) - p(2j+1, i). Needs 2k preparations
/// and k measurements; the 2x2 case uses the direct formula, larger k an LU
/// factorization. Zero for every classical source of dimension <= k whose
/// preparation and response randomness are independent.
WitnessResult nonlinear_witness(const ProbTable& t);

/// <D00> + <D01> + <D10> - <D11> - <D20> with <Dxy> = 2 p(x,y) - 1.
/// Needs >= 3 preparations and >= 2 measurements. Classically bounded by 3;
/// quantum tables reach 1 + 2 sqrt2.
WitnessResult linear_witness(const ProbTable& t);

/// Classical bound: 0 for the determinant witness, 3 for the linear one.
double witness_bound(WitnessKind kind);

/// Strict violation with a 1e-9 absolute guard band against boundary noise.
bool violates(WitnessKind kind, double value);

/// Family of settings swept in the phase plane: preparation x gets
/// prep_coeffs[x] * phi + prep_offsets[x]; measurement phases are fixed.
/// Defaults: determinant kind {1,2,3,4} x phi; linear kind {phi, -phi, pi};
/// measurements {0, pi/2} for both.
struct SettingFamily {
  std::vector<double> prep_coeffs;
  std::vector<double> prep_offsets;
  std::vector<double> meas_phases;

  static SettingFamily defaults(WitnessKind kind);
  PamSettings instantiate(double phi, double tbs_angle) const;
};

struct SweepRow {
  double phi = 0.0;
  double tbs_angle = 0.0;
  double value = 0.0;
  bool violated = false;
};

/// Evaluates the witness at every grid point, rows ordered phi-major.
std::vector<SweepRow> sweep_witness(WitnessKind kind, const SettingFamily& family,
                                    std::span<const double> phi_grid,
                                    std::span<const double> angle_grid);

}  // namespace qdc
