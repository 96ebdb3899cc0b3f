#include "qdc/circuits.hpp"

#include <array>
#include <cmath>

namespace qdc {

PureState qdc_state(const QdcParams& p) {
  const SpaceDescriptor space = SpaceDescriptor::paths(2);
  PureState s = basis_state(space, 0);
  s = apply(bs(space, {0, 1}), s);
  s = apply(phase_path(space, 1, p.prep_phase), s);
  s = apply(phase_path(space, 0, p.meas_phase), s);
  s = apply(tbs(space, p.tbs_angle, {0, 1}), s);
  return s;
}

PureState hybrid_state(const HybridParams& p) {
  const SpaceDescriptor space = SpaceDescriptor::pol_paths(2);
  CVector in = CVector::Zero(space.dim());
  in(space.index(0, 0)) = 1.0;  // (|H> + |V>)|0> / sqrt2
  in(space.index(1, 0)) = 1.0;
  PureState s = make_state(space, in);
  s = apply(bs(space, {0, 1}), s);
  s = apply(phase_pol(space, Polarization::V, p.pol_phase), s);
  s = apply(phase_path(space, 1, p.path_phase), s);
  s = apply(pr(space, p.pol_rotation), s);
  s = apply(tbs(space, p.tbs_angle, {0, 1}), s);
  return s;
}

PureState entangler_state(const EntanglerParams& p) {
  const SpaceDescriptor space = SpaceDescriptor::pol_paths(4);
  CVector in = CVector::Zero(space.dim());
  in(space.index(0, 1)) = 1.0;  // (|H> + |V>)|1> / sqrt2
  in(space.index(1, 1)) = 1.0;
  PureState s = make_state(space, in);

  // Routing stage: V is reflected into arm 0, then both arms get a fresh
  // polarization superposition (the sigma_z undoes the hwp sign on the arm
  // that carried V).
  constexpr std::array<int, 1> arm0{0};
  constexpr std::array<int, 1> arm1{1};
  s = apply(pbs(space, {1, 0}), s);
  s = apply(hwp225(space, arm0), s);
  s = apply(hwp225(space, arm1), s);
  s = apply(sigma_z(space, arm0), s);

  // Block A interferometer on arms {0,2}, block B on arms {1,3}; the phase
  // values are common to both blocks.
  constexpr std::array<int, 2> block_a{0, 2};
  constexpr std::array<int, 2> block_b{1, 3};
  s = apply(bs(space, {0, 2}), s);
  s = apply(bs(space, {1, 3}), s);
  s = apply(phase_pol(space, Polarization::V, p.pol_phase), s);
  s = apply(phase_path(space, 2, p.path_phase), s);
  s = apply(phase_path(space, 3, p.path_phase), s);
  s = apply(pr(space, p.pol_rotation_a, block_a), s);
  s = apply(pr(space, p.pol_rotation_b, block_b), s);
  s = apply(tbs(space, p.tbs_angle_a, {0, 2}), s);
  s = apply(tbs(space, p.tbs_angle_b, {1, 3}), s);
  return s;
}

}  // namespace qdc
