// Command-line front end: singlab {invariants,family,newton,section}.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "singlab/commands.hpp"

namespace {

void add_input(CLI::App* cmd, singlab::cli::InputArgs& in, bool with_param) {
  cmd->add_option("--poly", in.poly, "polynomial text, e.g. \"x^5+y^6+z^5+y^3*z^2\"")->required();
  cmd->add_option("--vars", in.vars, "comma-separated variable names, in order")->required();
  if (with_param) cmd->add_option("--param", in.param, "name of the deformation parameter")->required();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace singlab::cli;

  CLI::App app{"Newton polyhedra, Milnor numbers and mu-constant families"};
  app.set_version_flag("--version", SINGLAB_VERSION);
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  InvariantsArgs inv;
  auto* c_inv = app.add_subcommand("invariants", "mu, nu, multiplicity and non-degeneracy of a germ");
  add_input(c_inv, inv.input, false);
  c_inv->add_flag("--verify", inv.verify, "run both Milnor routes and compare");
  c_inv->add_option("--nmax", inv.nmax, "largest truncation degree for the oracle");
  c_inv->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  FamilyArgs fam;
  auto* c_fam = app.add_subcommand("family", "analyze a one-parameter deformation");
  add_input(c_fam, fam.input, true);
  c_fam->add_option("--samples", fam.samples, "number of nonzero parameter samples")->check(CLI::PositiveNumber);
  c_fam->add_option("--seed", fam.seed, "seed for samples beyond 1, 1/2, 1/3");
  c_fam->add_flag("--verify", fam.verify, "run both Milnor routes at every sample");
  c_fam->add_option("--nmax", fam.nmax, "largest truncation degree for the oracle");
  c_fam->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  NewtonArgs nwt;
  auto* c_nwt = app.add_subcommand("newton", "Newton polyhedron summary and Newton number");
  add_input(c_nwt, nwt.input, false);
  c_nwt->add_flag("--stabilize", nwt.stabilize, "pad missed axes with z_i^N until nu is stable");
  c_nwt->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  SectionArgs sec;
  auto* c_sec = app.add_subcommand("section", "Milnor number of a hyperplane section");
  add_input(c_sec, sec.input, false);
  c_sec->add_option("--hyperplane", sec.hyperplane, "\"z=0\" or \"z=a*x+b*y\"")->required();
  c_sec->add_option("--random", sec.random, "also sample this many random sections and report the minimum");
  c_sec->add_option("--seed", sec.seed, "seed for random sections");
  c_sec->add_option("--reference", sec.reference, "a quoted value to echo next to the computed one");
  c_sec->add_option("--nmax", sec.nmax, "largest truncation degree for the oracle");
  c_sec->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CommandResult r;
  if (c_inv->parsed())
    r = cmd_invariants(inv);
  else if (c_fam->parsed())
    r = cmd_family(fam);
  else if (c_nwt->parsed())
    r = cmd_newton(nwt);
  else
    r = cmd_section(sec);

  const std::string out = format == "text" ? render_text(r.document) : r.document.dump(2) + "\n";
  std::cout << out << std::flush;
  if (!r.diagnostic.empty()) std::cerr << "singlab: " << r.diagnostic << '\n';
  return r.exit_code;
}
