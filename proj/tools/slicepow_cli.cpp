// slicepow: command-line front end. Argument parsing only; see cli.hpp.

#include <iostream>

#include "CLI11.hpp"
#include "slicepow/cli.hpp"

int main(int argc, char** argv) {
  using slicepow::Command;
  slicepow::RunConfig cfg;
  CLI::App app{"Star-powers, star-roots and monodromy of quaternionic slice functions"};
  app.require_subcommand(1);

  app.add_option("--eps-real", cfg.eps_real, "non-real tolerance for quaternion anchors");
  app.add_option("--eps-stratum", cfg.eps_stratum, "stratum vanishing tolerance");
  app.add_option("--eps-match", cfg.eps_match, "relative branch matching tolerance");

  auto* pow = app.add_subcommand("star-pow", "k-th star-power of a stem");
  pow->add_option("--stem", cfg.stem_file, "stem JSON")->required();
  pow->add_option("--k", cfg.k, "exponent")->required();

  auto* prod = app.add_subcommand("star-prod", "star-product of two stems");
  prod->add_option("--stem", cfg.stem_file, "left factor")->required();
  prod->add_option("--other", cfg.other_stem_file, "right factor")->required();

  auto* rp = app.add_subcommand("roots-point", "the k^2 pointwise k-th roots of w");
  rp->add_option("--w", cfg.w_file, "point of C (x) H as JSON")->required();
  rp->add_option("--k", cfg.k)->required();
  rp->add_option("--tol", cfg.eps_stratum, "stratum tolerance");

  auto* rg = app.add_subcommand("roots-global", "global k-th star-roots along a path");
  rg->add_option("--stem", cfg.stem_file)->required();
  rg->add_option("--k", cfg.k)->required();
  rg->add_option("--path", cfg.path_file, "path JSON")->required();
  rg->add_option("--anchor-real", cfg.anchor_real, "real path point used as anchor");

  auto* mono = app.add_subcommand("monodromy", "permutation of branches around a loop");
  mono->add_option("--stem", cfg.stem_file)->required();
  mono->add_option("--k", cfg.k)->required();
  mono->add_option("--loop", cfg.loop_file, "closed path JSON")->required();

  auto* cls = app.add_subcommand("classify", "differential singularity of a stem, or stratum of a point");
  cls->add_option("--stem", cfg.stem_file);
  cls->add_option("--z", cfg.z_json, "stem variable as [re, im]");
  cls->add_option("--unit", cfg.unit_json, "imaginary unit as [0, a, b, c]");
  cls->add_option("--w", cfg.w_file, "point of C (x) H (stratum mode)");
  cls->add_option("--k", cfg.k, "power for stratum mode");

  auto* gt = app.add_subcommand("group-table", "check the automorphism group for k");
  gt->add_option("--k", cfg.k)->required();

  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  ver->add_option("--samples", cfg.samples);
  ver->add_option("--seed", cfg.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (pow->parsed()) cfg.command = Command::StarPow;
  else if (prod->parsed()) cfg.command = Command::StarProd;
  else if (rp->parsed()) cfg.command = Command::RootsPoint;
  else if (rg->parsed()) cfg.command = Command::RootsGlobal;
  else if (mono->parsed()) cfg.command = Command::Monodromy;
  else if (cls->parsed()) cfg.command = Command::Classify;
  else if (gt->parsed()) cfg.command = Command::GroupTable;
  else cfg.command = Command::Verify;

  return slicepow::run(cfg, std::cout);
}
