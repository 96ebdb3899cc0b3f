#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdctool {

struct GlobalOptions {
  uint64_t seed = 0;
  std::string out;
  std::string format;  // empty = per-command default
  bool degrees = false;

  double angle_unit() const;
  std::string resolve_format(const char* fallback) const;
};

struct MorphingOptions {
  int phi_steps = 181;
  int theta_steps = 46;
};

struct WitnessOptions {
  std::string kind = "linear";
  bool point = false;
  double phi = 0.0;
  double theta = 0.0;
  int phi_steps = 360;
  int theta_steps = 90;
  std::vector<double> prep_coeffs;   // empty = family default
  std::vector<double> prep_offsets;  // empty = family default
  std::vector<double> meas_phases;   // empty = family default
};

struct ClassicalBoundOptions {
  std::string kind = "both";  // both | linear | nonlinear
  int message_dim = 2;
  int mixtures = 10000;
};

struct HybridOptions {
  double pol_rotation = 0.0;
  double tbs_angle = 0.0;
  double path_phase = 0.0;
  double pol_phase = 0.0;
};

struct EntangleOptions {
  double pol_rotation_a = 0.0;
  double pol_rotation_b = 0.0;
  double tbs_angle_a = 0.0;
  double tbs_angle_b = 0.0;
  double path_phase = 0.0;
  double pol_phase = 0.0;
};

struct SampleOptions {
  std::string kind = "linear";
  double phi = 0.0;
  double theta = 0.0;
  long long shots = 1000000;
  double loss = 0.0;
  double efficiency = 1.0;
  bool bootstrap = false;
  int resamples = 1000;
  std::vector<double> prep_coeffs;
  std::vector<double> prep_offsets;
  std::vector<double> meas_phases;
};

void run_morphing(const MorphingOptions& opt, const GlobalOptions& global);
void run_witness(const WitnessOptions& opt, const GlobalOptions& global);
void run_classical_bound(const ClassicalBoundOptions& opt, const GlobalOptions& global);
void run_hybrid(const HybridOptions& opt, const GlobalOptions& global);
void run_entangle(const EntangleOptions& opt, const GlobalOptions& global);
void run_sample(const SampleOptions& opt, const GlobalOptions& global);

}  // namespace qdctool
