#include "qdc/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdc {

namespace {

void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b,
                        const char* what) {
  if (!(a == b))
    throw std::invalid_argument(std::string(what) + ": space mismatch (" +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + " dims)");
}

}  // namespace

ElementUnitary::ElementUnitary(const SpaceDescriptor& space, CMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
  space_.validate();
  const int n = space_.dim();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw std::invalid_argument("element matrix is " + std::to_string(matrix_.rows()) +
                                "x" + std::to_string(matrix_.cols()) +
                                ", expected " + std::to_string(n) + "x" + std::to_string(n));
  const double defect =
      (matrix_.adjoint() * matrix_ - CMatrix::Identity(n, n)).norm();
  if (!(defect < kUnitaryTol))
    throw std::invalid_argument("matrix is not unitary (defect " +
                                std::to_string(defect) + ")");
}

PureState make_state(const SpaceDescriptor& space, const CVector& amplitudes) {
  space.validate();
  if (amplitudes.size() != space.dim())
    throw std::invalid_argument("amplitude vector length " +
                                std::to_string(amplitudes.size()) +
                                " does not match space dimension " +
                                std::to_string(space.dim()));
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("cannot normalize a zero or non-finite amplitude vector");
  return PureState(space, amplitudes / n);
}

PureState basis_state(const SpaceDescriptor& space, int index) {
  space.validate();
  if (index < 0 || index >= space.dim())
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range for dimension " + std::to_string(space.dim()));
  CVector v = CVector::Zero(space.dim());
  v(index) = 1.0;
  return make_state(space, v);
}

PureState apply(const ElementUnitary& u, const PureState& s) {
  require_same_space(u.space(), s.space(), "apply");
  return PureState(s.space(), u.matrix() * s.amplitudes());
}

Complex inner(const PureState& a, const PureState& b) {
  require_same_space(a.space(), b.space(), "inner");
  return a.amplitudes().dot(b.amplitudes());
}

ElementUnitary compose(const ElementUnitary& second, const ElementUnitary& first) {
  require_same_space(second.space(), first.space(), "compose");
  return ElementUnitary(second.space(), second.matrix() * first.matrix());
}

PureState align_global_phase(const PureState& s) {
  const CVector& a = s.amplitudes();
  int pivot = 0;
  double best = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const double m = std::abs(a(i));
    if (m > best + 1e-15) {
      best = m;
      pivot = i;
    }
  }
  if (best == 0.0) return s;  // unreachable for normalized states
  const Complex phase = a(pivot) / best;
  return make_state(s.space(), a * std::conj(phase));
}

double max_amplitude_distance(const PureState& a, const PureState& b) {
  require_same_space(a.space(), b.space(), "distance");
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

double max_distance_up_to_phase(const PureState& a, const PureState& b) {
  return max_amplitude_distance(align_global_phase(a), align_global_phase(b));
}

}  // namespace qdc
