// gauge_atlas: command-line front end.  One JSON document on stdout, a one
// line summary on stderr, exit status = error code (0 on success).

#include <iostream>
#include <map>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "gauge_atlas/cli.hpp"

namespace {

const std::set<std::string> kSwitches = {"product", "degree-one"};

const std::map<std::string, std::string> kHelp = {
    {"manifold", "manifold file, or a bundled name such as t3 (searched in $GAUGE_ATLAS_MANIFOLD_DIR)"},
    {"r", "rank of PU(r)"},
    {"product", "classify over S^1 x X instead of X"},
    {"q-min", "lower end of the q4 window"},
    {"q-max", "upper end of the q4 window"},
    {"t2", "integral lift of t2 in H^2 coordinates (default 0)"},
    {"eta", "parity in H^1 coordinates"},
    {"deg", "degree"},
    {"q4", "q4 coefficient of a bundle on S^1 x X to decode"},
    {"c", "integral H^2 class (c1 of the U(r) lift)"},
    {"sigma", "integral H^1 class Poincare dual to the surface"},
    {"gamma", "section loop in H_1 coordinates"},
    {"d", "t2(P)[Sigma] mod r"},
    {"degree-one", "construct a degree-1 class"},
    {"orientation", "+ (ds ^ dvol_X positive) or -"},
    {"limit", "largest parity group listed in full"},
    {"samples", "random pairs per rank"},
    {"seed", "random seed"},
    {"config", "constant-curvature or winding"},
    {"grid", "points per axis"},
    {"n1", "first flux quantum"},
    {"n2", "second flux quantum"},
    {"w", "winding number of the test map"},
    {"s-steps", "subintervals in the path parameter"},
    {"kappa", "frobenius, killing or coroot"},
    {"profile", "trigonometric or bump"},
};

const std::map<std::string, std::string> kSubcommandHelp = {
    {"classify", "enumerate PU(r)-bundle classes"},
    {"gauge-components", "describe pi_0 of the gauge group"},
    {"mapping-torus", "mapping torus of a gauge class, or decode one"},
    {"exists-degree", "gauge class of degree d, or of degree 1"},
    {"g-sigma", "exponent k of a class in the fibration quotient"},
    {"lie-check", "Killing-trace and coroot identity suites"},
    {"verify-lattice", "lattice Chern-Weil and degree integrals"},
};

int emit(const gauge_atlas::cli::Report& rep, bool pretty) {
  if (pretty)
    std::cout << gauge_atlas::cli::pretty_text(rep);
  else
    std::cout << gauge_atlas::io::render(gauge_atlas::cli::to_json(rep));
  std::cerr << gauge_atlas::cli::summary_line(rep) << "\n";
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  using gauge_atlas::ErrorCode;
  using gauge_atlas::cli::CommandRequest;
  using gauge_atlas::cli::Report;

  const auto& table = gauge_atlas::cli::subcommand_flags();
  if (argc >= 2 && argv[1][0] != '-' && table.count(argv[1]) == 0) {
    Report rep;
    rep.ok = false;
    rep.subcommand = argv[1];
    rep.error = ErrorCode::unknown_subcommand;
    rep.message = std::string("unknown subcommand '") + argv[1] + "'";
    return emit(rep, false);
  }

  CLI::App app{"PU(r)-bundle classes, gauge group components and lattice Chern-Weil checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gauge_atlas::cli::kVersion));

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, bool> pretty;
  for (const auto& [name, spec] : table) {
    auto* sub = app.add_subcommand(name, kSubcommandHelp.at(name));
    auto& bucket = values[name];
    sub->add_flag("--pretty", pretty[name], "aligned text instead of JSON");
    std::set<std::string> flags = spec.required;
    flags.insert(spec.optional.begin(), spec.optional.end());
    for (const auto& flag : flags) {
      const auto help = kHelp.count(flag) ? kHelp.at(flag) : std::string();
      if (kSwitches.count(flag)) {
        sub->add_flag_callback("--" + flag, [&bucket, flag] { bucket[flag] = "true"; }, help);
      } else {
        auto* opt = sub->add_option_function<std::string>(
            "--" + flag, [&bucket, flag](const std::string& v) { bucket[flag] = v; }, help);
        if (spec.required.count(flag)) opt->required();
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Report rep;
    rep.ok = false;
    rep.subcommand = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    rep.error = ErrorCode::invalid_argument;
    rep.message = e.what();
    return emit(rep, false);
  }

  const auto* chosen = app.get_subcommands().front();
  CommandRequest req;
  req.subcommand = chosen->get_name();
  req.parameters = values[req.subcommand];
  if (const auto it = req.parameters.find("manifold"); it != req.parameters.end()) {
    req.manifold_path = it->second;
    req.parameters.erase(it);
  }
  return emit(gauge_atlas::cli::dispatch(req), pretty[req.subcommand]);
}
