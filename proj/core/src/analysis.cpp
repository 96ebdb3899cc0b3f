#include "qdc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdc/circuits.hpp"

namespace qdc {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr Complex kI{0.0, 1.0};

/// 1 - |<particle|wave>|^2 below this is treated as degenerate; the pair is
/// within ~0.8 degrees of +-pi/2 and coefficient recovery blows up there.
constexpr double kDegenerateGram = 1e-4;

Eigen::Vector2cd particle_pair(double phase) {
  return {kInvSqrt2, -std::polar(kInvSqrt2, phase)};
}

Eigen::Vector2cd wave_pair(double phase) {
  const Complex half = std::polar(1.0, phase / 2.0);
  return {half * std::cos(phase / 2.0), half * (-kI) * std::sin(phase / 2.0)};
}

/// Embeds a two-component factor on the given pair of basis indices.
CVector embed_pair(int dim, int i0, int i1, const Eigen::Vector2cd& v) {
  CVector out = CVector::Zero(dim);
  out(i0) = v(0);
  out(i1) = v(1);
  return out;
}

}  // namespace

WPBasis wp_basis(double phase) {
  const SpaceDescriptor space = SpaceDescriptor::paths(2);
  const PureState particle = make_state(space, particle_pair(phase));
  const PureState wave = make_state(space, wave_pair(phase));
  return WPBasis{phase, particle, wave, inner(particle, wave)};
}

double detect_prob(const PureState& s, int path) {
  const SpaceDescriptor& space = s.space();
  if (path < 0 || path >= space.path_dim)
    throw std::out_of_range("detector path " + std::to_string(path) +
                            " out of range for " + std::to_string(space.path_dim) +
                            " paths");
  double prob = 0.0;
  for (int pol = 0; pol < space.pol_dim; ++pol) prob += std::norm(s.amp(pol, path));
  return prob;
}

double fringe_visibility(double tbs_angle) {
  if (!(tbs_angle >= 0.0 && tbs_angle <= kPi / 4.0 + 1e-12))
    throw std::invalid_argument("visibility formula holds for angles in [0, pi/4]");
  return std::sin(2.0 * tbs_angle);
}

double empirical_visibility(std::span<const double> intensities) {
  if (intensities.size() < 3)
    throw std::invalid_argument("visibility sweep needs at least 3 points");
  const auto [lo, hi] = std::minmax_element(intensities.begin(), intensities.end());
  const double sum = *hi + *lo;
  if (sum <= 0.0) throw std::domain_error("degenerate sweep: all intensities zero");
  return (*hi - *lo) / sum;
}

double empirical_visibility(double tbs_angle, int phase_points) {
  if (phase_points < 3)
    throw std::invalid_argument("visibility sweep needs at least 3 points");
  std::vector<double> intensities(phase_points);
  for (int k = 0; k < phase_points; ++k) {
    const double phase = 2.0 * kPi * k / (phase_points - 1);
    intensities[k] = detect_prob(qdc_state({tbs_angle, phase, 0.0}), 0);
  }
  return empirical_visibility(intensities);
}

WPComponents wp_decompose(const PureState& s, double phase) {
  if (s.space() != SpaceDescriptor::paths(2))
    throw std::invalid_argument("wp_decompose expects the 2-dim path space");
  const WPBasis basis = wp_basis(phase);
  const Complex o = basis.overlap;
  const double gram_det = 1.0 - std::norm(o);
  if (gram_det < kDegenerateGram)
    throw DegenerateBasisError(
        "wave/particle pair is degenerate at phase " + std::to_string(phase) +
        " (1 - |overlap|^2 = " + std::to_string(gram_det) + ")");

  const Complex bp = inner(basis.particle, s);
  const Complex bw = inner(basis.wave, s);
  const Complex alpha = (bp - o * bw) / gram_det;
  const Complex beta = (bw - std::conj(o) * bp) / gram_det;

  const CVector reconstruction = alpha * basis.particle.amplitudes() +
                                 beta * basis.wave.amplitudes();
  const double residual = (s.amplitudes() - reconstruction).norm();
  return WPComponents{alpha, beta, residual};
}

ConcurrenceReport concurrence(const PureState& s, const WPFrame& frame) {
  const SpaceDescriptor& space = s.space();
  if (space.pol_dim != 2)
    throw std::invalid_argument("concurrence needs a polarization x path state");

  // Physical part: Schmidt coefficients across the pol | path cut. Reshape
  // is row-major by pol, matching the documented basis ordering.
  CMatrix m(space.pol_dim, space.path_dim);
  for (int pol = 0; pol < space.pol_dim; ++pol)
    for (int path = 0; path < space.path_dim; ++path) m(pol, path) = s.amp(pol, path);
  Eigen::JacobiSVD<CMatrix> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();

  ConcurrenceReport report;
  report.schmidt_coefficients.assign(sv.data(), sv.data() + sv.size());
  // With a 2-dim polarization factor there are exactly two Schmidt
  // coefficients, and sqrt(2 (1 - tr rho^2)) reduces to 2 l1 l2. The product
  // form avoids the cancellation the purity route hits near product states.
  report.physical = 2.0 * sv(0) * sv(1);

  // Logical part: relabel {particle, wave} of each DOF as an orthonormal
  // qubit and express the state in the four product vectors.
  const double pol_gram = 1.0 - (1.0 + std::pow(std::sin(frame.pol_phase), 2)) / 2.0;
  if (pol_gram < kDegenerateGram)
    throw DegenerateBasisError("polarization wave/particle pair is degenerate at phase " +
                               std::to_string(frame.pol_phase));

  const Eigen::Vector2cd pol_particle = particle_pair(frame.pol_phase);
  const Eigen::Vector2cd pol_wave = wave_pair(frame.pol_phase);

  CVector path_particle, path_wave;
  if (space.path_dim == 2) {
    const double path_gram =
        1.0 - (1.0 + std::pow(std::sin(frame.path_phase), 2)) / 2.0;
    if (path_gram < kDegenerateGram)
      throw DegenerateBasisError("path wave/particle pair is degenerate at phase " +
                                 std::to_string(frame.path_phase));
    path_particle = embed_pair(2, 0, 1, particle_pair(frame.path_phase));
    path_wave = embed_pair(2, 0, 1, wave_pair(frame.path_phase));
  } else {
    // Entangler layout: particle lives on arms {1,3}, wave on arms {0,2};
    // disjoint support makes this pair exactly orthogonal.
    path_particle = embed_pair(4, 1, 3, particle_pair(frame.path_phase));
    path_wave = embed_pair(4, 0, 2, wave_pair(frame.path_phase));
  }

  CMatrix products(space.dim(), 4);
  const CVector pol_vecs[2] = {CVector(pol_particle), CVector(pol_wave)};
  const CVector path_vecs[2] = {path_particle, path_wave};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CVector v(space.dim());
      for (int pol = 0; pol < 2; ++pol)
        for (int path = 0; path < space.path_dim; ++path)
          v(space.index(pol, path)) = pol_vecs[a](pol) * path_vecs[b](path);
      products.col(a * 2 + b) = v;
    }

  const Eigen::Vector4cd coeffs =
      products.colPivHouseholderQr().solve(s.amplitudes());
  report.logical_residual = (s.amplitudes() - products * coeffs).norm();
  if (report.logical_residual < 1e-8) {
    const double norm2 = coeffs.squaredNorm();
    const Complex det = coeffs(0) * coeffs(3) - coeffs(1) * coeffs(2);
    report.logical = 2.0 * std::abs(det) / norm2;
  }
  return report;
}

}  // namespace qdc
