#include "qdc/witness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdc/analysis.hpp"

namespace qdc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kViolationTol = 1e-9;

}  // namespace

ProbTable prob_table(const PamSettings& settings) {
  const int nx = static_cast<int>(settings.preparation_phases.size());
  const int ny = static_cast<int>(settings.measurement_phases.size());
  if (nx == 0 || ny == 0)
    throw std::invalid_argument("settings need at least one preparation and one measurement");
  ProbTable t;
  t.p.resize(nx, ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      const QdcParams params{settings.tbs_angle, settings.preparation_phases[x],
                             settings.measurement_phases[y]};
      t.p(x, y) = detect_prob(qdc_state(params), 0);
    }
  t.provenance = ProbTable::Provenance::analytic;
  return t;
}

WitnessResult nonlinear_witness(const ProbTable& t) {
  const int k = t.n_measurements();
  if (k < 1 || t.n_preparations() != 2 * k)
    throw std::invalid_argument("determinant witness needs 2k preparations for k measurements, got " +
                                std::to_string(t.n_preparations()) + " x " +
                                std::to_string(t.n_measurements()));
  Eigen::MatrixXd w(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) w(i, j) = t.p(2 * j, i) - t.p(2 * j + 1, i);

  double det;
  if (k == 1) {
    det = w(0, 0);
  } else if (k == 2) {
    det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
  } else {
    det = Eigen::FullPivLU<Eigen::MatrixXd>(w).determinant();
  }

  WitnessResult r;
  r.kind = WitnessKind::nonlinear_det;
  r.value = std::abs(det);
  r.witness_matrix = std::move(w);
  return r;
}

WitnessResult linear_witness(const ProbTable& t) {
  if (t.n_preparations() < 3 || t.n_measurements() < 2)
    throw std::invalid_argument("linear witness needs >= 3 preparations and >= 2 measurements, got " +
                                std::to_string(t.n_preparations()) + " x " +
                                std::to_string(t.n_measurements()));
  auto d = [&](int x, int y) { return 2.0 * t.p(x, y) - 1.0; };
  WitnessResult r;
  r.kind = WitnessKind::linear_idw;
  r.value = d(0, 0) + d(0, 1) + d(1, 0) - d(1, 1) - d(2, 0);
  return r;
}

double witness_bound(WitnessKind kind) {
  return kind == WitnessKind::nonlinear_det ? 0.0 : 3.0;
}

bool violates(WitnessKind kind, double value) {
  return value > witness_bound(kind) + kViolationTol;
}

SettingFamily SettingFamily::defaults(WitnessKind kind) {
  SettingFamily f;
  if (kind == WitnessKind::nonlinear_det) {
    f.prep_coeffs = {1.0, 2.0, 3.0, 4.0};
    f.prep_offsets = {0.0, 0.0, 0.0, 0.0};
  } else {
    f.prep_coeffs = {1.0, -1.0, 0.0};
    f.prep_offsets = {0.0, 0.0, kPi};
  }
  f.meas_phases = {0.0, kPi / 2.0};
  return f;
}

PamSettings SettingFamily::instantiate(double phi, double tbs_angle) const {
  if (prep_coeffs.empty() || meas_phases.empty())
    throw std::invalid_argument("setting family needs preparation coefficients and measurement phases");
  if (!prep_offsets.empty() && prep_offsets.size() != prep_coeffs.size())
    throw std::invalid_argument("preparation offsets must match coefficients in length");
  PamSettings s;
  s.tbs_angle = tbs_angle;
  s.preparation_phases.resize(prep_coeffs.size());
  for (size_t i = 0; i < prep_coeffs.size(); ++i) {
    const double offset = prep_offsets.empty() ? 0.0 : prep_offsets[i];
    s.preparation_phases[i] = prep_coeffs[i] * phi + offset;
  }
  s.measurement_phases = meas_phases;
  return s;
}

std::vector<SweepRow> sweep_witness(WitnessKind kind, const SettingFamily& family,
                                    std::span<const double> phi_grid,
                                    std::span<const double> angle_grid) {
  if (phi_grid.empty() || angle_grid.empty())
    throw std::invalid_argument("sweep grids must be nonempty");
  std::vector<SweepRow> rows;
  rows.reserve(phi_grid.size() * angle_grid.size());
  for (double phi : phi_grid)
    for (double angle : angle_grid) {
      const PamSettings settings = family.instantiate(phi, angle);
      const ProbTable table = prob_table(settings);
      const WitnessResult result = kind == WitnessKind::nonlinear_det
                                       ? nonlinear_witness(table)
                                       : linear_witness(table);
      rows.push_back({phi, angle, result.value, violates(kind, result.value)});
    }
  return rows;
}

}  // namespace qdc
