#include "qdc/elements.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qdc {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_path(const SpaceDescriptor& space, int path) {
  if (path < 0 || path >= space.path_dim)
    throw std::out_of_range("path index " + std::to_string(path) +
                            " out of range for " + std::to_string(space.path_dim) +
                            " paths");
}

void require_pair(const SpaceDescriptor& space, PathPair arms) {
  require_path(space, arms.first);
  require_path(space, arms.second);
  if (arms.first == arms.second)
    throw std::invalid_argument("coupled paths must be distinct, got " +
                                std::to_string(arms.first) + " twice");
}

void require_polarization(const SpaceDescriptor& space) {
  if (space.pol_dim != 2)
    throw std::invalid_argument("element needs a polarization degree of freedom");
}

std::vector<int> checked_paths(const SpaceDescriptor& space, std::span<const int> paths) {
  if (paths.empty())
    throw std::invalid_argument("path restriction must name at least one path");
  std::vector<int> out(paths.begin(), paths.end());
  for (int p : out) require_path(space, p);
  return out;
}

/// Rotation block used by both splitters and the polarization rotator:
/// column 0 -> (cos, sin), column 1 -> (sin, -cos). An involution.
void put_rotation_block(CMatrix& m, int i0, int i1, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m(i0, i0) = c;
  m(i1, i0) = s;
  m(i0, i1) = s;
  m(i1, i1) = -c;
}

CMatrix identity_matrix(const SpaceDescriptor& space) {
  return CMatrix::Identity(space.dim(), space.dim());
}

}  // namespace

ElementUnitary identity_element(const SpaceDescriptor& space) {
  space.validate();
  return ElementUnitary(space, identity_matrix(space));
}

ElementUnitary bs(const SpaceDescriptor& space, PathPair arms) {
  return tbs(space, kPi / 4.0, arms);
}

ElementUnitary tbs(const SpaceDescriptor& space, double angle, PathPair arms) {
  space.validate();
  require_pair(space, arms);
  if (!std::isfinite(angle)) throw std::invalid_argument("tbs angle must be finite");
  CMatrix m = identity_matrix(space);
  for (int pol = 0; pol < space.pol_dim; ++pol)
    put_rotation_block(m, space.index(pol, arms.first), space.index(pol, arms.second), angle);
  return ElementUnitary(space, m);
}

ElementUnitary phase_path(const SpaceDescriptor& space, int path, double value) {
  space.validate();
  require_path(space, path);
  if (!std::isfinite(value)) throw std::invalid_argument("phase value must be finite");
  CMatrix m = identity_matrix(space);
  const Complex factor = std::polar(1.0, value);
  for (int pol = 0; pol < space.pol_dim; ++pol) {
    const int i = space.index(pol, path);
    m(i, i) = factor;
  }
  return ElementUnitary(space, m);
}

ElementUnitary phase_pol(const SpaceDescriptor& space, Polarization target, double value) {
  std::vector<int> all(space.path_dim);
  for (int p = 0; p < space.path_dim; ++p) all[p] = p;
  return phase_pol(space, target, value, all);
}

ElementUnitary phase_pol(const SpaceDescriptor& space, Polarization target, double value,
                         std::span<const int> paths) {
  space.validate();
  require_polarization(space);
  if (!std::isfinite(value)) throw std::invalid_argument("phase value must be finite");
  CMatrix m = identity_matrix(space);
  const Complex factor = std::polar(1.0, value);
  for (int p : checked_paths(space, paths)) {
    const int i = space.index(static_cast<int>(target), p);
    m(i, i) = factor;
  }
  return ElementUnitary(space, m);
}

ElementUnitary pr(const SpaceDescriptor& space, double angle) {
  std::vector<int> all(space.path_dim);
  for (int p = 0; p < space.path_dim; ++p) all[p] = p;
  return pr(space, angle, all);
}

ElementUnitary pr(const SpaceDescriptor& space, double angle, std::span<const int> paths) {
  space.validate();
  require_polarization(space);
  if (!std::isfinite(angle)) throw std::invalid_argument("pr angle must be finite");
  CMatrix m = identity_matrix(space);
  for (int p : checked_paths(space, paths))
    put_rotation_block(m, space.index(0, p), space.index(1, p), angle);
  return ElementUnitary(space, m);
}

ElementUnitary pbs(const SpaceDescriptor& space, PathPair arms) {
  space.validate();
  require_polarization(space);
  require_pair(space, arms);
  CMatrix m = identity_matrix(space);
  const int va = space.index(1, arms.first);
  const int vb = space.index(1, arms.second);
  m(va, va) = 0.0;
  m(vb, vb) = 0.0;
  m(vb, va) = 1.0;
  m(va, vb) = 1.0;
  return ElementUnitary(space, m);
}

ElementUnitary hwp225(const SpaceDescriptor& space) {
  std::vector<int> all(space.path_dim);
  for (int p = 0; p < space.path_dim; ++p) all[p] = p;
  return hwp225(space, all);
}

ElementUnitary hwp225(const SpaceDescriptor& space, std::span<const int> paths) {
  space.validate();
  require_polarization(space);
  CMatrix m = identity_matrix(space);
  for (int p : checked_paths(space, paths)) {
    const int h = space.index(0, p);
    const int v = space.index(1, p);
    m(h, h) = kInvSqrt2;
    m(v, h) = kInvSqrt2;
    m(h, v) = kInvSqrt2;
    m(v, v) = -kInvSqrt2;
  }
  return ElementUnitary(space, m);
}

ElementUnitary sigma_z(const SpaceDescriptor& space) {
  return phase_pol(space, Polarization::V, kPi);
}

ElementUnitary sigma_z(const SpaceDescriptor& space, std::span<const int> paths) {
  return phase_pol(space, Polarization::V, kPi, paths);
}

AngleRegime angle_regime(double angle) {
  if (angle >= 0.0 && angle <= kPi / 4.0 + 1e-12) return AngleRegime::nominal;
  if (angle >= 0.0 && angle <= kPi / 2.0 + 1e-12) return AngleRegime::loose;
  return AngleRegime::outside;
}

ElementUnitary ElementSpec::build(const SpaceDescriptor& space) const {
  switch (kind) {
    case Kind::bs:
      return qdc::bs(space, arms);
    case Kind::tbs:
      return qdc::tbs(space, angle, arms);
    case Kind::phase_path:
      return qdc::phase_path(space, path, angle);
    case Kind::phase_pol:
      return paths.empty() ? qdc::phase_pol(space, pol, angle)
                           : qdc::phase_pol(space, pol, angle, paths);
    case Kind::pbs:
      return qdc::pbs(space, arms);
    case Kind::pr:
      return paths.empty() ? qdc::pr(space, angle) : qdc::pr(space, angle, paths);
    case Kind::hwp225:
      return paths.empty() ? qdc::hwp225(space) : qdc::hwp225(space, paths);
    case Kind::sigma_z:
      return paths.empty() ? qdc::sigma_z(space) : qdc::sigma_z(space, paths);
    case Kind::mirror:
      return identity_element(space);
  }
  throw std::logic_error("unhandled element kind");
}

AngleRegime ElementSpec::regime() const {
  if (kind == Kind::tbs || kind == Kind::pr) return angle_regime(angle);
  return AngleRegime::nominal;
}

}  // namespace qdc
