#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "gammalab/errors.hpp"
#include "gammalab/reports.hpp"

using namespace gammalab;

namespace {

void add_common(CLI::App* sub, SessionConfig& cfg, std::string& format, std::string& out) {
  sub->add_option("--n", cfg.n, "rank of SL(n)")->capture_default_str();
  sub->add_option("--q0", cfg.q0, "residue field size of F (2, 3, 4 or 5)")->capture_default_str();
  sub->add_option("--radius", cfg.radius, "exploration radius around the standard chamber")->capture_default_str();
  sub->add_option("--precision", cfg.precision, "Laurent window (default 2*radius+4)");
  sub->add_option("--cap-galleries", cfg.cap_galleries, "galleries enumerated per terminal chamber")
      ->capture_default_str();
  sub->add_option("--cap-chambers", cfg.cap_chambers, "chamber limit for the exploration ball")
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed recorded in the report")->capture_default_str();
  sub->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  sub->add_option("--out", out, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gallery-quotient group and distinction for SL(n,E)/SL(n,F)"};
  app.require_subcommand(1);
  SessionConfig cfg;
  std::string format = "json";
  std::string out;
  bool no_reconstruct = false;

  auto* explore_cmd = app.add_subcommand("explore", "chamber census of the ball");
  add_common(explore_cmd, cfg, format, out);
  explore_cmd->add_option("--export-graph", cfg.export_graph, "write keys, adjacency and distances as JSON");
  auto* courtes_cmd = app.add_subcommand("courtes", "panel statistics and the two-shape law");
  add_common(courtes_cmd, cfg, format, out);
  auto* gamma_cmd = app.add_subcommand("gamma", "generators of the truncated group");
  add_common(gamma_cmd, cfg, format, out);
  auto* dist_cmd = app.add_subcommand("distinguish", "fixed space of the contragredient module");
  add_common(dist_cmd, cfg, format, out);
  dist_cmd->add_option("--module", cfg.module, "module file, or builtin 'trivial' / 'sign'")->capture_default_str();
  dist_cmd->add_flag("--no-reconstruct", no_reconstruct, "skip the distribution-function check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  cfg.reconstruct = !no_reconstruct;
  const std::string command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (command == "explore") {
      report = cmd_explore(cfg);
    } else if (command == "courtes") {
      report = cmd_courtes(cfg);
    } else if (command == "gamma") {
      report = cmd_gamma(cfg);
    } else {
      report = cmd_distinguish(cfg);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted (raise --precision): " << e.what() << "\n";
    return kTruncated;
  } catch (const RegionError& e) {
    std::cerr << "region error: " << e.what() << "\n";
    return kTruncated;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (report.payload.contains("graph")) {
    std::ofstream g(cfg.export_graph);
    if (!g) {
      std::cerr << "error: cannot write " << cfg.export_graph << "\n";
      return kInputError;
    }
    g << dump_report(report.payload["graph"]);
    report.payload.erase("graph");
  }
  const std::string text = format == "json" ? dump_report(report.payload) : render_table(command, report.payload);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return kInputError;
    }
    f << text;
  }
  std::cerr << command << " finished in " << seconds << " s\n";
  return report.exit_code;
}
