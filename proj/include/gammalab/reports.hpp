#ifndef GAMMALAB_REPORTS_HPP
#define GAMMALAB_REPORTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "gammalab/building.hpp"

namespace gammalab {

enum ExitCode : int { kOk = 0, kInputError = 1, kInvariantViolation = 2, kTruncated = 3 };

struct SessionConfig {
  int n = 2;
  int q0 = 2;
  /// Exploration radius of the chamber ball.
  int radius = 2;
  std::optional<int> precision;
  std::size_t cap_galleries = 10'000;
  std::size_t cap_chambers = 2'000'000;
  std::uint64_t seed = 1;
  /// Builtin name ("trivial", "sign") or a path to a module file.
  std::string module = "trivial";
  bool reconstruct = true;
  /// Optional path for the full graph export of `explore`.
  std::string export_graph;

  int effective_precision() const { return precision.value_or(default_precision(radius)); }
  BuildingParams building() const { return {n, q0, effective_precision()}; }
  /// Throws ValidationError on unusable settings.
  void validate() const;
  nlohmann::json to_json() const;
};

struct Report {
  nlohmann::json payload;
  int exit_code = kOk;
};

Report cmd_explore(const SessionConfig& config);
Report cmd_courtes(const SessionConfig& config);
Report cmd_gamma(const SessionConfig& config);
Report cmd_distinguish(const SessionConfig& config);

/// Keys, adjacency by type and both distance arrays, chambers in key order.
nlohmann::json graph_to_json(const ChamberGraph& graph);

/// Stable serialization used for byte-identical comparisons.
std::string dump_report(const nlohmann::json& payload);
/// Human-readable summary of a report produced by the named command.
std::string render_table(const std::string& command, const nlohmann::json& payload);

}  // namespace gammalab

#endif  // GAMMALAB_REPORTS_HPP
