#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qdc/space.hpp"

namespace qdc {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Frobenius tolerance for U†U = I and L2 tolerance for state norms.
inline constexpr double kUnitaryTol = 1e-10;

/// Unitary action of one optical element on the full space.
/// Construction verifies unitarity, so anything that typechecks as an
/// ElementUnitary is safe to apply.
class ElementUnitary {
 public:
  ElementUnitary(const SpaceDescriptor& space, CMatrix matrix);

  const SpaceDescriptor& space() const { return space_; }
  const CMatrix& matrix() const { return matrix_; }

 private:
  SpaceDescriptor space_;
  CMatrix matrix_;
};

/// Normalized pure state. Immutable value type: every operation returns a
/// new state, so states can be shared freely across threads.
class PureState {
 public:
  const SpaceDescriptor& space() const { return space_; }
  const CVector& amplitudes() const { return amps_; }
  Complex amp(int pol, int path) const { return amps_(space_.index(pol, path)); }
  int dim() const { return space_.dim(); }

  friend PureState make_state(const SpaceDescriptor&, const CVector&);
  friend PureState apply(const ElementUnitary&, const PureState&);

 private:
  PureState(const SpaceDescriptor& space, CVector amps)
      : space_(space), amps_(std::move(amps)) {}

  SpaceDescriptor space_;
  CVector amps_;
};

/// Normalizes the given amplitudes into a state.
/// Throws std::invalid_argument on a dimension mismatch or a zero vector.
PureState make_state(const SpaceDescriptor& space, const CVector& amplitudes);

/// The computational basis state with a 1 at the given flat index.
PureState basis_state(const SpaceDescriptor& space, int index);

/// amplitudes <- matrix * amplitudes. Throws on a space mismatch.
PureState apply(const ElementUnitary& u, const PureState& s);

/// <a|b>. Throws on a space mismatch.
Complex inner(const PureState& a, const PureState& b);

/// Matrix product second * first (apply `first`, then `second`).
ElementUnitary compose(const ElementUnitary& second, const ElementUnitary& first);

/// Multiplies by a global phase so the largest-magnitude amplitude becomes
/// real and positive. Ties broken by lowest index.
PureState align_global_phase(const PureState& s);

/// max_i |a_i - b_i| over amplitudes, as is.
double max_amplitude_distance(const PureState& a, const PureState& b);

/// Same, after aligning the global phase of both states.
double max_distance_up_to_phase(const PureState& a, const PureState& b);

}  // namespace qdc
