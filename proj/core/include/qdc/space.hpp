#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

/// Hilbert space of a single photon over spatial paths and (optionally)
/// polarization. The basis ordering is fixed throughout the library:
///
///   flat index = pol_index * path_dim + path_index,   pol 0 = H, pol 1 = V.
///
/// Polarization is the major factor, so an amplitude vector reshapes
/// row-major into a (pol_dim x path_dim) matrix whose rows are the H/V
/// components. Supported shapes: 2 or 4 paths, 1 or 2 polarizations.
struct SpaceDescriptor {
  int path_dim = 2;
  int pol_dim = 1;

  constexpr int dim() const { return path_dim * pol_dim; }
  constexpr int index(int pol, int path) const { return pol * path_dim + path; }

  bool operator==(const SpaceDescriptor&) const = default;

  void validate() const {
    if (path_dim != 2 && path_dim != 4)
      throw std::invalid_argument("path_dim must be 2 or 4, got " + std::to_string(path_dim));
    if (pol_dim != 1 && pol_dim != 2)
      throw std::invalid_argument("pol_dim must be 1 or 2, got " + std::to_string(pol_dim));
  }

  /// Path-only space (no polarization degree of freedom).
  static SpaceDescriptor paths(int n) {
    SpaceDescriptor s{n, 1};
    s.validate();
    return s;
  }

  /// Polarization x path product space.
  static SpaceDescriptor pol_paths(int n) {
    SpaceDescriptor s{n, 2};
    s.validate();
    return s;
  }
};

enum class Polarization { H = 0, V = 1 };

}  // namespace qdc
