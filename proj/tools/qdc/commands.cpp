#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>

#include <json.hpp>

#include "qdc/analysis.hpp"
#include "qdc/circuits.hpp"
#include "qdc/classical.hpp"
#include "qdc/closed_form.hpp"
#include "qdc/sampling.hpp"
#include "qdc/witness.hpp"

#include "output.hpp"

namespace qdctool {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCrossCheckTol = 1e-12;

using nlohmann::json;
using namespace qdc;

std::vector<double> linspace_closed(double lo, double hi, int n) {
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = lo + (hi - lo) * i / (n - 1);
  return grid;
}

std::vector<double> linspace_halfopen(double lo, double hi, int n) {
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = lo + (hi - lo) * i / n;
  return grid;
}

void require_steps(int steps, const char* what) {
  if (steps < 2) throw std::invalid_argument(std::string(what) + " must be >= 2");
}

json complex_json(const Complex& z) {
  return json{{"im", z.imag()}, {"re", z.real()}};
}

json amplitudes_json(const PureState& s) {
  json out = json::array();
  for (int i = 0; i < s.dim(); ++i) out.push_back(complex_json(s.amplitudes()(i)));
  return out;
}

json settings_json(const PamSettings& s) {
  return json{{"measurement_phases", s.measurement_phases},
              {"preparation_phases", s.preparation_phases},
              {"tbs_angle", s.tbs_angle}};
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

WitnessKind parse_kind(const std::string& kind) {
  if (kind == "linear") return WitnessKind::linear_idw;
  if (kind == "nonlinear") return WitnessKind::nonlinear_det;
  throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

SettingFamily family_with_overrides(WitnessKind kind, std::vector<double> coeffs,
                                    std::vector<double> offsets,
                                    std::vector<double> meas, double unit) {
  SettingFamily family = SettingFamily::defaults(kind);
  if (!coeffs.empty()) family.prep_coeffs = std::move(coeffs);
  if (!offsets.empty()) {
    for (double& v : offsets) v *= unit;
    family.prep_offsets = std::move(offsets);
  } else if (!family.prep_coeffs.empty() &&
             family.prep_offsets.size() != family.prep_coeffs.size()) {
    family.prep_offsets.assign(family.prep_coeffs.size(), 0.0);
  }
  if (!meas.empty()) {
    for (double& v : meas) v *= unit;
    family.meas_phases = std::move(meas);
  }
  return family;
}

/// Closed-form value for a witness evaluation, when the settings shape has
/// one (k = 2 for the determinant kind). Returns nullopt otherwise.
std::optional<double> closed_form_value(WitnessKind kind, const PamSettings& s) {
  if (kind == WitnessKind::nonlinear_det) {
    if (s.preparation_phases.size() == 4 && s.measurement_phases.size() == 2)
      return std::abs(closed_form::nonlinear_det(s));
    return std::nullopt;
  }
  if (s.preparation_phases.size() >= 3 && s.measurement_phases.size() >= 2)
    return closed_form::linear_idw(s);
  return std::nullopt;
}

/// Coefficients of a two-component factor state in its wave/particle pair.
/// The pair formulas are the same for the path and polarization qubits, so
/// the factor is lifted onto the 2-path space for the solve.
json factor_components_json(const Eigen::Vector2cd& factor, double phase) {
  const PureState lifted = make_state(SpaceDescriptor::paths(2), factor);
  const PureState aligned = align_global_phase(lifted);
  const WPComponents c = wp_decompose(aligned, phase);
  return json{{"particle", complex_json(c.particle_amp)},
              {"residual", c.residual},
              {"wave", complex_json(c.wave_amp)}};
}

json concurrence_json(const ConcurrenceReport& r) {
  json out;
  out["schmidt_coefficients"] = r.schmidt_coefficients;
  out["physical_concurrence"] = r.physical;
  if (r.logical)
    out["logical_concurrence"] = *r.logical;
  else
    out["logical_concurrence"] = nullptr;
  out["logical_residual"] = r.logical_residual;
  return out;
}

}  // namespace

double GlobalOptions::angle_unit() const { return degrees ? kPi / 180.0 : 1.0; }

std::string GlobalOptions::resolve_format(const char* fallback) const {
  return format.empty() ? fallback : format;
}

void run_morphing(const MorphingOptions& opt, const GlobalOptions& global) {
  require_steps(opt.phi_steps, "phi-steps");
  require_steps(opt.theta_steps, "theta-steps");
  const std::vector<double> phis = linspace_closed(0.0, 2.0 * kPi, opt.phi_steps);
  const std::vector<double> thetas = linspace_closed(0.0, kPi / 4.0, opt.theta_steps);
  const std::string format = global.resolve_format("csv");

  json config{{"format", format},
              {"out", global.out},
              {"phi_range", {0.0, 2.0 * kPi}},
              {"phi_steps", opt.phi_steps},
              {"theta_range", {0.0, kPi / 4.0}},
              {"theta_steps", opt.theta_steps}};

  double max_error = 0.0;
  std::vector<std::vector<std::string>> csv_rows;
  json json_rows = json::array();
  for (double phi : phis)
    for (double theta : thetas) {
      const double intensity = detect_prob(qdc_state({theta, phi, 0.0}), 0);
      const double reference = closed_form::detection_probability(theta, phi, 0.0);
      max_error = std::max(max_error, std::abs(intensity - reference));
      if (max_error > kCrossCheckTol)
        throw CrossCheckError("simulated intensity drifted from the closed form by " +
                              fmt17(max_error) + " at phi=" + fmt17(phi) +
                              ", theta=" + fmt17(theta));
      if (format == "csv")
        csv_rows.push_back({fmt17(phi), fmt17(theta), fmt17(intensity)});
      else
        json_rows.push_back(
            json{{"intensity", intensity}, {"phi", phi}, {"theta", theta}});
    }

  json meta = make_meta("sweep-morphing", config);
  meta["cross_check_max_error"] = max_error;
  if (format == "csv") {
    write_csv_with_sidecar(global.out, {"phi", "theta", "intensity"}, csv_rows, meta);
  } else {
    write_file(global.out,
               json{{"meta", meta}, {"rows", json_rows}}.dump(2) + "\n");
  }
}

void run_witness(const WitnessOptions& opt, const GlobalOptions& global) {
  const WitnessKind kind = parse_kind(opt.kind);
  const double unit = global.angle_unit();
  const SettingFamily family = family_with_overrides(
      kind, opt.prep_coeffs, opt.prep_offsets, opt.meas_phases, unit);

  json config{{"kind", opt.kind},
              {"meas_phases", family.meas_phases},
              {"out", global.out},
              {"point", opt.point},
              {"prep_coeffs", family.prep_coeffs},
              {"prep_offsets", family.prep_offsets}};

  double max_error = 0.0;
  auto evaluate = [&](double phi, double theta) {
    const PamSettings settings = family.instantiate(phi, theta);
    const ProbTable table = prob_table(settings);
    WitnessResult result =
        kind == WitnessKind::nonlinear_det ? nonlinear_witness(table) : linear_witness(table);
    result.settings = settings;
    if (const auto reference = closed_form_value(kind, settings)) {
      const double err = std::abs(result.value - *reference);
      max_error = std::max(max_error, err);
      if (err > kCrossCheckTol)
        throw CrossCheckError("witness value drifted from the closed form by " +
                              fmt17(err) + " at phi=" + fmt17(phi) +
                              ", theta=" + fmt17(theta));
    }
    return result;
  };

  if (opt.point) {
    const double phi = opt.phi * unit;
    const double theta = opt.theta * unit;
    config["phi"] = phi;
    config["theta"] = theta;
    const std::string format = global.resolve_format("json");
    config["format"] = format;

    const WitnessResult result = evaluate(phi, theta);
    json meta = make_meta("witness", config);
    meta["cross_check_max_error"] = max_error;
    if (format == "csv") {
      write_csv_with_sidecar(
          global.out, {"phi", "theta", "value", "violated"},
          {{fmt17(phi), fmt17(theta), fmt17(result.value),
            violates(kind, result.value) ? "true" : "false"}},
          meta);
      return;
    }
    json body{{"meta", meta}};
    json rj{{"bound", witness_bound(kind)},
            {"kind", opt.kind},
            {"phi", phi},
            {"settings", settings_json(result.settings)},
            {"theta", theta},
            {"value", result.value},
            {"violated", violates(kind, result.value)}};
    if (result.witness_matrix) rj["witness_matrix"] = matrix_json(*result.witness_matrix);
    body["result"] = rj;
    write_file(global.out, body.dump(2) + "\n");
    return;
  }

  require_steps(opt.phi_steps, "phi-steps");
  require_steps(opt.theta_steps, "theta-steps");
  const std::vector<double> phis = linspace_halfopen(0.0, 2.0 * kPi, opt.phi_steps);
  const std::vector<double> thetas = linspace_closed(0.0, kPi / 4.0, opt.theta_steps);
  const std::string format = global.resolve_format("csv");
  config["format"] = format;
  config["phi_range"] = {0.0, 2.0 * kPi};
  config["phi_steps"] = opt.phi_steps;
  config["phi_endpoint_excluded"] = true;
  config["theta_range"] = {0.0, kPi / 4.0};
  config["theta_steps"] = opt.theta_steps;

  std::vector<std::vector<std::string>> csv_rows;
  json json_rows = json::array();
  for (double phi : phis)
    for (double theta : thetas) {
      const WitnessResult result = evaluate(phi, theta);
      const bool flag = violates(kind, result.value);
      if (format == "csv") {
        csv_rows.push_back(
            {fmt17(phi), fmt17(theta), fmt17(result.value), flag ? "true" : "false"});
      } else {
        json row{{"phi", phi},
                 {"theta", theta},
                 {"value", result.value},
                 {"violated", flag}};
        if (result.witness_matrix)
          row["witness_matrix"] = matrix_json(*result.witness_matrix);
        json_rows.push_back(std::move(row));
      }
    }

  json meta = make_meta("witness", config);
  meta["cross_check_max_error"] = max_error;
  if (format == "csv")
    write_csv_with_sidecar(global.out, {"phi", "theta", "value", "violated"}, csv_rows,
                           meta);
  else
    write_file(global.out, json{{"meta", meta}, {"rows", json_rows}}.dump(2) + "\n");
}

void run_classical_bound(const ClassicalBoundOptions& opt, const GlobalOptions& global) {
  if (opt.kind != "both" && opt.kind != "linear" && opt.kind != "nonlinear")
    throw std::invalid_argument("kind must be both, linear, or nonlinear");
  if (opt.message_dim < 1) throw std::invalid_argument("message dimension must be >= 1");
  if (opt.mixtures < 0) throw std::invalid_argument("mixtures must be >= 0");

  json config{{"format", "json"},
              {"kind", opt.kind},
              {"message_dim", opt.message_dim},
              {"mixtures", opt.mixtures},
              {"out", global.out},
              {"seed", global.seed}};

  const auto start = std::chrono::steady_clock::now();
  json report{{"message_dim", opt.message_dim}, {"mixtures", opt.mixtures}};

  auto bound_block = [&](WitnessKind kind, int n_prep, int n_meas) {
    json block;
    block["preparations"] = n_prep;
    block["measurements"] = n_meas;
    block["strategy_count"] = strategy_count(n_prep, n_meas, opt.message_dim);
    block["bound"] = witness_bound(kind);
    block["deterministic_max"] =
        classical_max(kind, n_prep, n_meas, opt.message_dim, 0, global.seed);
    if (opt.mixtures > 0)
      block["mixture_max"] =
          classical_max(kind, n_prep, n_meas, opt.message_dim, opt.mixtures, global.seed);
    return block;
  };

  if (opt.kind != "nonlinear")
    report["linear"] = bound_block(WitnessKind::linear_idw, 3, 2);
  if (opt.kind != "linear")
    report["determinant"] = bound_block(WitnessKind::nonlinear_det, 4, 2);

  const auto stop = std::chrono::steady_clock::now();
  // the one intentionally non-reproducible output field; see docs/file-formats.md
  report["runtime_ms"] =
      std::chrono::duration<double, std::milli>(stop - start).count();

  json body{{"meta", make_meta("classical-bound", config)}, {"report", report}};
  write_file(global.out, body.dump(2) + "\n");
}

void run_hybrid(const HybridOptions& opt, const GlobalOptions& global) {
  const double unit = global.angle_unit();
  const HybridParams params{opt.pol_rotation * unit, opt.tbs_angle * unit,
                            opt.path_phase * unit, opt.pol_phase * unit};
  const PureState s = hybrid_state(params);
  const CVector reference = closed_form::hybrid_amplitudes(params);
  const double max_error = (s.amplitudes() - reference).cwiseAbs().maxCoeff();
  if (max_error > kCrossCheckTol)
    throw CrossCheckError("hybrid circuit drifted from the closed form by " +
                          fmt17(max_error));

  json config{{"format", "json"},
              {"out", global.out},
              {"path_phase", params.path_phase},
              {"pol_phase", params.pol_phase},
              {"pol_rotation", params.pol_rotation},
              {"tbs_angle", params.tbs_angle}};

  // The state is a product, so the two factors are the singular pair.
  CMatrix m(2, 2);
  for (int pol = 0; pol < 2; ++pol)
    for (int path = 0; path < 2; ++path) m(pol, path) = s.amp(pol, path);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector2cd pol_factor = svd.matrixU().col(0);
  const Eigen::Vector2cd path_factor = svd.matrixV().col(0).conjugate();

  json analysis;
  analysis["pol_components"] = factor_components_json(pol_factor, params.pol_phase);
  analysis["path_components"] = factor_components_json(path_factor, params.path_phase);
  analysis["concurrence"] =
      concurrence_json(concurrence(s, {params.pol_phase, params.path_phase}));

  json meta = make_meta("hybrid", config);
  meta["cross_check_max_error"] = max_error;
  json body{{"meta", meta},
            {"state",
             json{{"amplitudes", amplitudes_json(s)},
                  {"space", json{{"path_dim", 2}, {"pol_dim", 2}}}}},
            {"analysis", analysis}};
  write_file(global.out, body.dump(2) + "\n");
}

void run_entangle(const EntangleOptions& opt, const GlobalOptions& global) {
  const double unit = global.angle_unit();
  const EntanglerParams params{opt.pol_rotation_a * unit, opt.pol_rotation_b * unit,
                               opt.tbs_angle_a * unit,    opt.tbs_angle_b * unit,
                               opt.path_phase * unit,     opt.pol_phase * unit};
  const PureState s = entangler_state(params);
  const CVector reference = closed_form::entangler_amplitudes(params);
  const double max_error = (s.amplitudes() - reference).cwiseAbs().maxCoeff();
  if (max_error > kCrossCheckTol)
    throw CrossCheckError("entangler circuit drifted from the closed form by " +
                          fmt17(max_error));

  json config{{"format", "json"},
              {"out", global.out},
              {"path_phase", params.path_phase},
              {"pol_phase", params.pol_phase},
              {"pol_rotation_a", params.pol_rotation_a},
              {"pol_rotation_b", params.pol_rotation_b},
              {"tbs_angle_a", params.tbs_angle_a},
              {"tbs_angle_b", params.tbs_angle_b}};

  json analysis;
  try {
    analysis =
        concurrence_json(concurrence(s, {params.pol_phase, params.path_phase}));
  } catch (const DegenerateBasisError& e) {
    // physical part is frame-independent; report it and leave logical null
    CMatrix m(2, 4);
    for (int pol = 0; pol < 2; ++pol)
      for (int path = 0; path < 4; ++path) m(pol, path) = s.amp(pol, path);
    const Eigen::VectorXd sv = Eigen::JacobiSVD<CMatrix>(m).singularValues();
    analysis["schmidt_coefficients"] = std::vector<double>{sv(0), sv(1)};
    analysis["physical_concurrence"] = 2.0 * sv(0) * sv(1);
    analysis["logical_concurrence"] = nullptr;
    analysis["logical_residual"] = nullptr;
    analysis["logical_note"] = e.what();
  }

  json meta = make_meta("entangle", config);
  meta["cross_check_max_error"] = max_error;
  json body{{"meta", meta},
            {"state",
             json{{"amplitudes", amplitudes_json(s)},
                  {"space", json{{"path_dim", 4}, {"pol_dim", 2}}}}},
            {"analysis", analysis}};
  write_file(global.out, body.dump(2) + "\n");
}

void run_sample(const SampleOptions& opt, const GlobalOptions& global) {
  const WitnessKind kind = parse_kind(opt.kind);
  const double unit = global.angle_unit();
  const SettingFamily family = family_with_overrides(
      kind, opt.prep_coeffs, opt.prep_offsets, opt.meas_phases, unit);
  const PamSettings settings = family.instantiate(opt.phi * unit, opt.theta * unit);
  const NoiseConfig noise{opt.shots, opt.loss, opt.efficiency, global.seed};
  noise.validate();

  json config{{"bootstrap", opt.bootstrap},
              {"efficiency", noise.efficiency},
              {"kind", opt.kind},
              {"loss", noise.loss},
              {"out", global.out},
              {"phi", opt.phi * unit},
              {"resamples", opt.resamples},
              {"seed", global.seed},
              {"settings", settings_json(settings)},
              {"shots_per_setting", noise.shots_per_setting},
              {"theta", opt.theta * unit}};

  const CountTable counts = sample_counts(settings, noise);
  for (int x = 0; x < counts.n_prep; ++x)
    for (int y = 0; y < counts.n_meas; ++y) {
      const CellCounts& cell = counts.at(x, y);
      if (cell.n0 + cell.n1 + cell.n_lost != noise.shots_per_setting)
        throw CrossCheckError("cell counts do not add up to the shot count");
    }
  const ProbTable table = estimate_table(counts);
  const WitnessResult estimate = estimate_witness(
      kind, settings, noise,
      opt.bootstrap ? UncertaintyMethod::bootstrap : UncertaintyMethod::delta,
      opt.resamples);

  const ProbTable analytic_table = prob_table(settings);
  const double analytic = (kind == WitnessKind::nonlinear_det
                               ? nonlinear_witness(analytic_table)
                               : linear_witness(analytic_table))
                              .value;

  const std::string format = global.resolve_format("json");
  config["format"] = format;
  json meta = make_meta("sample", config);

  if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int x = 0; x < counts.n_prep; ++x)
      for (int y = 0; y < counts.n_meas; ++y) {
        const CellCounts& cell = counts.at(x, y);
        rows.push_back({std::to_string(x), std::to_string(y), std::to_string(cell.n0),
                        std::to_string(cell.n1), std::to_string(cell.n_lost),
                        fmt17(table.p(x, y)), fmt17((*table.std_errors)(x, y))});
      }
    write_csv_with_sidecar(global.out,
                           {"x", "y", "n0", "n1", "n_lost", "p_hat", "std_error"}, rows,
                           meta);
    return;
  }

  json count_rows = json::array();
  json estimate_rows = json::array();
  for (int x = 0; x < counts.n_prep; ++x)
    for (int y = 0; y < counts.n_meas; ++y) {
      const CellCounts& cell = counts.at(x, y);
      count_rows.push_back(json{{"n0", cell.n0},
                                {"n1", cell.n1},
                                {"n_lost", cell.n_lost},
                                {"x", x},
                                {"y", y}});
      estimate_rows.push_back(json{{"p_hat", table.p(x, y)},
                                   {"std_error", (*table.std_errors)(x, y)},
                                   {"x", x},
                                   {"y", y}});
    }

  json witness_block{{"analytic_value", analytic},
                     {"kind", opt.kind},
                     {"value", estimate.value},
                     {"violated", violates(kind, estimate.value)}};
  if (estimate.std_error) {
    witness_block["std_error"] = *estimate.std_error;
    witness_block["deviation_sigmas"] =
        *estimate.std_error > 0.0
            ? json(std::abs(estimate.value - analytic) / *estimate.std_error)
            : json(nullptr);
  }

  json body{{"meta", meta},
            {"counts", count_rows},
            {"estimated_table", estimate_rows},
            {"witness", witness_block}};
  write_file(global.out, body.dump(2) + "\n");
}

}  // namespace qdctool
