#include <exception>
#include <memory>
#include <numbers>

#include <CLI11.hpp>

#include "qdc/analysis.hpp"
#include "qdc/classical.hpp"

#include "commands.hpp"
#include "json_config.hpp"
#include "output.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

int main(int argc, char** argv) {
  using namespace qdctool;

  CLI::App app{
      "Interferometer simulator: wave-particle morphing sweeps, dimension "
      "witnesses, brute-force classical bounds, and finite-statistics "
      "detection with losses."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  app.config_formatter(std::make_shared<ConfigJSON>());
  app.set_config("--config", "", "JSON config file mirroring all flags");

  GlobalOptions global;
  app.add_option("--seed", global.seed, "master RNG seed")->capture_default_str();
  app.add_option("--out", global.out, "output file path");
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--degrees", global.degrees, "interpret angle arguments as degrees");

  MorphingOptions morphing;
  CLI::App* sweep = app.add_subcommand(
      "sweep-morphing", "detection probability over the phase/angle plane");
  sweep->fallthrough();
  sweep->add_option("--phi-steps", morphing.phi_steps, "phase points on [0, 2pi]")
      ->capture_default_str();
  sweep->add_option("--theta-steps", morphing.theta_steps,
                    "splitter-angle points on [0, pi/4]")
      ->capture_default_str();

  WitnessOptions witness;
  witness.phi = kPi / 4.0;
  witness.theta = kPi / 4.0;
  CLI::App* wit = app.add_subcommand("witness", "dimension witness values");
  wit->fallthrough();
  wit->add_option("--kind", witness.kind, "linear or nonlinear")
      ->check(CLI::IsMember({"linear", "nonlinear"}))
      ->capture_default_str();
  wit->add_flag("--point", witness.point, "evaluate a single (phi, theta) point");
  wit->add_option("--phi", witness.phi, "phase for point mode")->capture_default_str();
  wit->add_option("--theta", witness.theta, "splitter angle for point mode")
      ->capture_default_str();
  wit->add_option("--phi-steps", witness.phi_steps, "phase points on [0, 2pi)")
      ->capture_default_str();
  wit->add_option("--theta-steps", witness.theta_steps,
                  "splitter-angle points on [0, pi/4]")
      ->capture_default_str();
  wit->add_option("--prep-coeffs", witness.prep_coeffs,
                  "preparation phase multipliers (default family if omitted)");
  wit->add_option("--prep-offsets", witness.prep_offsets, "preparation phase offsets");
  wit->add_option("--meas-phases", witness.meas_phases, "measurement phases");

  ClassicalBoundOptions classical;
  CLI::App* cls = app.add_subcommand("classical-bound",
                                     "certify classical bounds by enumeration");
  cls->fallthrough();
  cls->add_option("--kind", classical.kind, "both, linear, or nonlinear")
      ->check(CLI::IsMember({"both", "linear", "nonlinear"}))
      ->capture_default_str();
  cls->add_option("--message-dim", classical.message_dim, "classical message alphabet size")
      ->capture_default_str();
  cls->add_option("--mixtures", classical.mixtures, "random convex mixtures per kind")
      ->capture_default_str();

  HybridOptions hybrid;
  hybrid.tbs_angle = kPi / 4.0;
  CLI::App* hyb = app.add_subcommand(
      "hybrid", "two-degree-of-freedom state and its analysis");
  hyb->fallthrough();
  hyb->add_option("--pol-rotation", hybrid.pol_rotation, "polarization rotator angle")
      ->capture_default_str();
  hyb->add_option("--tbs-angle", hybrid.tbs_angle, "tunable splitter angle")
      ->capture_default_str();
  hyb->add_option("--path-phase", hybrid.path_phase, "phase in path 1")
      ->capture_default_str();
  hyb->add_option("--pol-phase", hybrid.pol_phase, "phase on the V component")
      ->capture_default_str();

  EntangleOptions entangle;
  entangle.pol_rotation_b = kPi / 4.0;
  entangle.tbs_angle_a = kPi / 4.0;
  CLI::App* ent = app.add_subcommand(
      "entangle", "wave-particle entangled state and concurrence");
  ent->fallthrough();
  ent->add_option("--pol-rotation-a", entangle.pol_rotation_a,
                  "rotator angle in the block on arms {0,2}")
      ->capture_default_str();
  ent->add_option("--pol-rotation-b", entangle.pol_rotation_b,
                  "rotator angle in the block on arms {1,3}")
      ->capture_default_str();
  ent->add_option("--tbs-angle-a", entangle.tbs_angle_a, "splitter angle, arms {0,2}")
      ->capture_default_str();
  ent->add_option("--tbs-angle-b", entangle.tbs_angle_b, "splitter angle, arms {1,3}")
      ->capture_default_str();
  ent->add_option("--path-phase", entangle.path_phase, "phase on the second arm of each block")
      ->capture_default_str();
  ent->add_option("--pol-phase", entangle.pol_phase, "phase on the V component")
      ->capture_default_str();

  SampleOptions sample;
  sample.phi = kPi / 4.0;
  sample.theta = kPi / 4.0;
  CLI::App* smp = app.add_subcommand(
      "sample", "finite-statistics witness estimate under loss");
  smp->fallthrough();
  smp->add_option("--kind", sample.kind, "linear or nonlinear")
      ->check(CLI::IsMember({"linear", "nonlinear"}))
      ->capture_default_str();
  smp->add_option("--phi", sample.phi, "family phase")->capture_default_str();
  smp->add_option("--theta", sample.theta, "splitter angle")->capture_default_str();
  smp->add_option("--shots", sample.shots, "shots per setting")->capture_default_str();
  smp->add_option("--loss", sample.loss, "loss probability inside the interferometer")
      ->capture_default_str();
  smp->add_option("--efficiency", sample.efficiency, "detector efficiency")
      ->capture_default_str();
  smp->add_flag("--bootstrap", sample.bootstrap,
                "bootstrap uncertainty instead of the delta method");
  smp->add_option("--resamples", sample.resamples, "bootstrap resamples")
      ->capture_default_str();
  smp->add_option("--prep-coeffs", sample.prep_coeffs, "preparation phase multipliers");
  smp->add_option("--prep-offsets", sample.prep_offsets, "preparation phase offsets");
  smp->add_option("--meas-phases", sample.meas_phases, "measurement phases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return kExitUsage;
  }

  if (global.out.empty()) {
    emit_error("usage", "--out is required");
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) run_morphing(morphing, global);
    if (wit->parsed()) run_witness(witness, global);
    if (cls->parsed()) run_classical_bound(classical, global);
    if (hyb->parsed()) run_hybrid(hybrid, global);
    if (ent->parsed()) run_entangle(entangle, global);
    if (smp->parsed()) run_sample(sample, global);
  } catch (const IoError& e) {
    emit_error("io", e.what());
    return kExitRuntime;
  } catch (const CrossCheckError& e) {
    emit_error("cross_check", e.what());
    return kExitRuntime;
  } catch (const qdc::EnumerationLimitError& e) {
    emit_error("guard", e.what());
    return kExitRuntime;
  } catch (const std::exception& e) {
    emit_error("runtime", e.what());
    return kExitRuntime;
  }
  return kExitOk;
}
