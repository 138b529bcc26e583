#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "conefaces/run.hpp"

namespace {

void add_output(CLI::App* cmd, conefaces::RunConfig& cfg) {
  cmd->add_option("--out", cfg.output_path, "Write the JSON report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  using conefaces::Command;
  conefaces::RunConfig cfg;
  std::string k_range;

  CLI::App app{"Exact faces of the cones of nonnegative forms and sums of squares"};
  app.require_subcommand(1);

  auto* dims = app.add_subcommand("dims", "Dimensions of I_d, (I^2)_2d and I^(2)_2d for a configuration");
  dims->add_option("--config", cfg.input_path, "Point configuration JSON")->required();
  dims->add_option("--n", cfg.n, "Expected number of variables");
  dims->add_option("--d", cfg.d, "Degree d")->required();
  add_output(dims, cfg);

  auto* indep = app.add_subcommand("independence", "Decide d-independence (exit 0 yes, 1 no, 2 indeterminate)");
  indep->add_option("--config", cfg.input_path, "Point configuration JSON")->required();
  indep->add_option("--n", cfg.n, "Expected number of variables");
  indep->add_option("--d", cfg.d, "Degree d")->required();
  add_output(indep, cfg);

  auto* construct = app.add_subcommand("construct", "Build the explicit constructions");
  construct->add_option("kind", cfg.construct_kind, "snd | six4 | seven3")
      ->required()
      ->check(CLI::IsMember({"snd", "six4", "seven3"}));
  construct->add_option("--n", cfg.n, "Number of variables (snd)");
  construct->add_option("--d", cfg.d, "Degree (snd)");
  construct->add_option("--config", cfg.input_path, "Point configuration JSON (six4, seven3)");
  add_output(construct, cfg);

  auto* certify = app.add_subcommand("certify", "Not-SOS certificate for a worked example");
  certify->add_option("--case", cfg.certify_case, "44 (quartics in 4 variables) | 36 (ternary sextics)")
      ->required()
      ->check(CLI::IsMember({"44", "36"}));
  certify->add_option("--epsilon", cfg.epsilon, "Rational weight of R, e.g. 1 or 1/8");
  certify->add_option("--samples", cfg.samples, "Sphere samples for the numeric minimum");
  certify->add_option("--seed", cfg.seed, "Seed of the sampler");
  add_output(certify, cfg);

  auto* gapscan = app.add_subcommand("gapscan", "Naive gap G_{n,2d}(k) profile");
  gapscan->add_option("--n", cfg.n, "Number of variables")->required();
  gapscan->add_option("--two-d", cfg.two_d, "Even degree 2d")->required();
  gapscan->add_option("--k-range", k_range, "Inclusive range a..b");
  gapscan->add_option("--csv", cfg.csv_path, "Also write k,G plot data here");
  add_output(gapscan, cfg);

  auto* random = app.add_subcommand("random", "Seeded random integer configuration");
  random->add_option("--n", cfg.n, "Number of variables")->required();
  random->add_option("--size", cfg.size, "Number of points")->required();
  random->add_option("--seed", cfg.seed, "Seed");
  random->add_flag("--glp", cfg.require_glp, "Require general linear position");
  random->add_option("--d-independent", cfg.require_d_independent, "Require d-independence for this d");
  random->add_option("--bound", cfg.bound, "Coordinates drawn from [-bound, bound]");
  add_output(random, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : conefaces::exit_code::usage;
  }

  if (dims->parsed()) cfg.command = Command::dims;
  if (indep->parsed()) cfg.command = Command::independence;
  if (construct->parsed()) cfg.command = Command::construct;
  if (certify->parsed()) cfg.command = Command::certify;
  if (gapscan->parsed()) cfg.command = Command::gapscan;
  if (random->parsed()) cfg.command = Command::random;

  if (!k_range.empty()) {
    try {
      cfg.k_range = conefaces::parse_k_range(k_range);
    } catch (const std::exception& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return conefaces::exit_code::usage;
    }
  }
  return conefaces::run(cfg, std::cout, std::cerr);
}
