#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdc/state.hpp"

namespace qdc {

/// Raised when the wave/particle pair becomes too parallel to solve against
/// (their overlap approaches modulus 1 as the phase approaches +-pi/2).
class DegenerateBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operational wave/particle pair on the 2-path space at a given phase:
///   particle = (|0> - e^{i phase}|1>)/sqrt2
///   wave     = e^{i phase/2}(cos(phase/2)|0> - i sin(phase/2)|1>)
/// The two are never orthogonal; |overlap|^2 = (1 + sin^2 phase)/2.
struct WPBasis {
  double phase;
  PureState particle;
  PureState wave;
  Complex overlap;  // <particle|wave> = (1 + i sin phase)/sqrt2
};

WPBasis wp_basis(double phase);

/// Probability that the detector on `path` clicks: sum over polarization of
/// |amplitude|^2 at that path. Throws std::out_of_range on a bad path.
double detect_prob(const PureState& s, int path);

/// Fringe visibility sin(2 angle) of the tunable interferometer output.
/// Domain: angle in [0, pi/4].
double fringe_visibility(double tbs_angle);

/// (max - min)/(max + min) over swept intensities. Needs >= 3 points with
/// the extremal phases on the grid; throws std::domain_error when the sweep
/// is degenerate (all intensities zero).
double empirical_visibility(std::span<const double> intensities);

/// Sweeps detect_prob(qdc_state, path 0) over `phase_points` phases covering
/// [0, 2pi] inclusive and returns the empirical visibility.
double empirical_visibility(double tbs_angle, int phase_points);

/// Coefficients of s = particle_amp * |particle> + wave_amp * |wave> in the
/// (nonorthogonal) pair at `phase`, solved through the 2x2 Gram system.
struct WPComponents {
  Complex particle_amp;
  Complex wave_amp;
  double residual;  // norm of s minus the reconstruction
};

/// Throws DegenerateBasisError when 1 - |overlap|^2 < 1e-4 (phase within
/// about 0.8 degrees of +-pi/2); coefficients are unstable past that point.
WPComponents wp_decompose(const PureState& s, double phase);

/// Phases defining the wave/particle frame in each degree of freedom.
struct WPFrame {
  double pol_phase = 0.0;
  double path_phase = 0.0;
};

/// Entanglement across the polarization | path cut.
///
/// `physical` is basis-independent: sqrt(2 (1 - tr rho_pol^2)) from the
/// reduced polarization state, equal to 2 l1 l2 for the two Schmidt
/// coefficients. `logical` relabels the wave/particle states of each degree
/// of freedom as an orthonormal qubit pair and evaluates 2|det| of the
/// resulting 2x2 coefficient matrix; it is only defined when the state
/// actually lies in the span of the four wave/particle products
/// (logical_residual below 1e-8), and is reported as nullopt otherwise.
struct ConcurrenceReport {
  double physical = 0.0;
  std::optional<double> logical;
  double logical_residual = 0.0;
  std::vector<double> schmidt_coefficients;
};

/// Requires pol_dim = 2 (4- or 8-dim states). In the 8-dim case the logical
/// path qubit is particle on arms {1,3} and wave on arms {0,2}, matching the
/// entangler layout; in the 4-dim case both live on the single path pair.
ConcurrenceReport concurrence(const PureState& s, const WPFrame& frame);

}  // namespace qdc
