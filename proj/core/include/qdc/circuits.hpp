#pragma once

#include "qdc/elements.hpp"
#include "qdc/state.hpp"

namespace qdc {

/// Single-photon interferometer with a tunable output splitter. The photon
/// enters path 0; prep_phase sits in path 1 inside the preparation stage,
/// meas_phase in path 0 inside the measurement stage, before the tbs.
struct QdcParams {
  double tbs_angle = 0.0;
  double prep_phase = 0.0;
  double meas_phase = 0.0;
};

/// Two-degree-of-freedom variant: an independent polarization interferometer
/// (rotator angle, pol_phase on V) rides on the path interferometer
/// (tbs_angle, path_phase on path 1).
struct HybridParams {
  double pol_rotation = 0.0;
  double tbs_angle = 0.0;
  double path_phase = 0.0;
  double pol_phase = 0.0;
};

/// Wave-particle entangler: two two-DOF blocks in parallel, block A on arms
/// {0,2} (pol_rotation_a, tbs_angle_a) and block B on arms {1,3}
/// (pol_rotation_b, tbs_angle_b), sharing the two phase values.
struct EntanglerParams {
  double pol_rotation_a = 0.0;
  double pol_rotation_b = 0.0;
  double tbs_angle_a = 0.0;
  double tbs_angle_b = 0.0;
  double path_phase = 0.0;
  double pol_phase = 0.0;
};

/// Final 2-dim path state: bs -> phase_path(1, prep) -> phase_path(0, meas)
/// -> tbs(angle) applied to |0>.
PureState qdc_state(const QdcParams& p);

/// Final 4-dim pol x path product state, from input (|H>+|V>)|0>/sqrt2:
/// bs -> phase_pol(V) -> phase_path(1) -> pr -> tbs.
PureState hybrid_state(const HybridParams& p);

/// Final 8-dim pol x 4-path state, from input (|H>+|V>)|1>/sqrt2. Element
/// order (see docs/entangler-network.md):
///   pbs(1,0) -> hwp225 on arm 0 -> hwp225 on arm 1 -> sigma_z on arm 0
///   -> bs(0,2) -> bs(1,3) -> phase_pol(V) -> phase_path(2) -> phase_path(3)
///   -> pr_a on {0,2} -> pr_b on {1,3} -> tbs_a(0,2) -> tbs_b(1,3)
PureState entangler_state(const EntanglerParams& p);

}  // namespace qdc
