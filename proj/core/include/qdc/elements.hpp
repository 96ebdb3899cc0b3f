#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qdc/state.hpp"

namespace qdc {

/// Constructors for the optical elements of the interferometer networks.
/// Every constructor returns a full-space ElementUnitary (identity on all
/// untargeted components) and is checked for unitarity on construction.
///
/// Conventions, with column j the image of basis state j:
///   bs:      |a> -> (|a>+|b>)/sqrt2,        |b> -> (|a>-|b>)/sqrt2
///   tbs:     |a> -> cos t|a> + sin t|b>,    |b> -> sin t|a> - cos t|b>
///   pr:      |H> -> cos t|H> + sin t|V>,    |V> -> sin t|H> - cos t|V>
///   pbs:     |H,p> -> |H,p>,                |V,p> <-> |V,p'>
///   hwp225:  |H> -> (|H>+|V>)/sqrt2,        |V> -> (|H>-|V>)/sqrt2
///   sigma_z: |V> -> -|V>
/// Mirrors carry no phase and are represented by the identity.

using PathPair = std::pair<int, int>;

/// Identity on the whole space.
ElementUnitary identity_element(const SpaceDescriptor& space);

/// 50:50 beam splitter on two paths.
ElementUnitary bs(const SpaceDescriptor& space, PathPair arms);

/// Tunable beam splitter with reflectivity cos^2(angle); equals bs at pi/4.
ElementUnitary tbs(const SpaceDescriptor& space, double angle, PathPair arms);

/// Phase shifter in one path: multiplies that path by e^{i value}.
ElementUnitary phase_path(const SpaceDescriptor& space, int path, double value);

/// Polarization-selective phase: multiplies one polarization component by
/// e^{i value}, on all paths or a restricted set of paths.
ElementUnitary phase_pol(const SpaceDescriptor& space, Polarization target, double value);
ElementUnitary phase_pol(const SpaceDescriptor& space, Polarization target, double value,
                         std::span<const int> paths);

/// Polarization rotator by `angle`, acting on all paths or a restricted set
/// (the entangler network places rotators in individual arms).
ElementUnitary pr(const SpaceDescriptor& space, double angle);
ElementUnitary pr(const SpaceDescriptor& space, double angle, std::span<const int> paths);

/// Polarizing beam splitter coupling two paths: H is transmitted, V is
/// swapped between the pair.
ElementUnitary pbs(const SpaceDescriptor& space, PathPair arms);

/// Half-wave plate at 22.5 degrees (Hadamard-like on polarization).
ElementUnitary hwp225(const SpaceDescriptor& space);
ElementUnitary hwp225(const SpaceDescriptor& space, std::span<const int> paths);

/// Pi-phase shifter on V; shorthand for phase_pol(V, pi).
ElementUnitary sigma_z(const SpaceDescriptor& space);
ElementUnitary sigma_z(const SpaceDescriptor& space, std::span<const int> paths);

/// Splitting/rotation angles are nominally exercised on [0, pi/4]; values up
/// to pi/2 are accepted with a warning flag, anything else is out of regime.
/// Purely advisory: no constructor rejects a finite angle.
enum class AngleRegime { nominal, loose, outside };
AngleRegime angle_regime(double angle);

/// Declarative description of one element, e.g. for config-driven circuits.
struct ElementSpec {
  enum class Kind {
    bs,
    tbs,
    phase_path,
    phase_pol,
    pbs,
    pr,
    hwp225,
    sigma_z,
    mirror,
  };

  Kind kind = Kind::mirror;
  double angle = 0.0;                  // tbs/pr angle or phase value
  int path = 0;                        // phase_path target
  Polarization pol = Polarization::H;  // phase_pol target
  PathPair arms{0, 1};                 // bs/tbs/pbs coupled pair
  std::vector<int> paths;              // restriction for pol elements; empty = all

  ElementUnitary build(const SpaceDescriptor& space) const;
  AngleRegime regime() const;
};

}  // namespace qdc
