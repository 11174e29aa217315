#ifndef GAMMALAB_BUILDING_HPP
#define GAMMALAB_BUILDING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gammalab/affine_weyl.hpp"
#include "gammalab/hecke.hpp"
#include "gammalab/lattice.hpp"

namespace gammalab {

struct BuildingParams {
  int n = 2;
  int q0 = 2;
  int precision = 8;

  int q() const { return q0 * q0; }
};

/// Default window for an exploration ball of the given radius.
int default_precision(int radius);

/// A chamber of the building of SL(n, E): one canonical vertex per type.
/// The type-i lattices form the chain L_0 > L_1 > ... > L_{n-1} > t L_0.
struct Chamber {
  std::vector<Vertex> vertices;

  int rank() const { return static_cast<int>(vertices.size()); }
  std::string key() const;
  friend bool operator==(const Chamber& a, const Chamber& b) { return a.key() == b.key(); }
};

/// Codimension-one face: the chamber minus its vertex of type `type`.
struct Panel {
  std::vector<Vertex> vertices;
  int type = 0;

  std::string key() const;
};

/// Assembles a chamber from vertices of pairwise distinct types.
Chamber make_chamber(std::vector<Vertex> vertices);

Chamber standard_chamber(const BuildingParams& params);

Panel panel_of(const Chamber& c, int type);

/// All q+1 chambers through the type-`type` panel of `c`, including `c`, sorted by key.
std::vector<Chamber> panel_neighbors(const Chamber& c, int type);

Chamber theta(const Chamber& c);

/// Membership in X_F: every vertex lattice is Frobenius-stable.
bool is_rational(const Chamber& c);

/// Breadth-first ball around the standard chamber.
///
/// Only chambers with dist_to_base < radius are expanded, so every panel
/// meeting the open ball is complete and the graph is the full induced
/// subgraph on the closed ball. dist_to_xf is the ball-internal distance to
/// the nearest rational chamber; it equals the true distance whenever
/// dist_to_base + dist_to_xf <= radius, which is what xf_exact records.
class ChamberGraph {
 public:
  BuildingParams params;
  int radius = 0;
  /// Largest radius whose closed ball is completely known (< radius only after truncation).
  int complete_radius = 0;
  bool truncated = false;

  std::size_t size() const { return chamber_vertices_.size(); }
  Chamber chamber(int c) const;
  const std::string& key(int c) const { return keys_[c]; }
  /// -1 when absent.
  int find(const std::string& key) const;
  int find(const Chamber& c) const { return find(c.key()); }

  /// Other chambers through the type-s panel of c, sorted by key; empty if unexplored.
  const std::vector<int>& adjacent(int c, int s) const { return adjacency_[c][s]; }
  bool panel_complete(int c, int s) const;
  /// The q+1 chambers of the panel (c included), sorted by key; requires a complete panel.
  std::vector<int> panel_chambers(int c, int s) const;

  int dist_to_base(int c) const { return dist_base_[c]; }
  /// -1 when no rational chamber is reachable inside the ball.
  int dist_to_xf(int c) const { return dist_xf_[c]; }
  bool xf_exact(int c) const;
  bool rational(int c) const { return rational_[c]; }
  /// Index of theta(c), or -1 if it fell outside the ball.
  int theta_index(int c) const { return theta_[c]; }

  /// Distance statistics of the type-s panel of c, or nullopt if any chamber
  /// of the panel is missing or its distance to X_F is not certified.
  std::optional<PanelStats> panel_stats(int c, int s) const;

  /// Chamber indices sorted by canonical key.
  std::vector<int> sorted_by_key() const;

  friend ChamberGraph explore(const BuildingParams& params, int radius, std::size_t cap_chambers);

 private:
  int intern_vertex(const Vertex& v);
  int intern_chamber(const Chamber& c, int dist);

  std::vector<Vertex> vertex_table_;
  std::vector<bool> vertex_rational_;
  std::unordered_map<std::string, int> vertex_index_;
  std::vector<std::vector<int>> chamber_vertices_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, int> chamber_index_;
  std::vector<std::vector<std::vector<int>>> adjacency_;
  std::vector<int> dist_base_;
  std::vector<int> dist_xf_;
  std::vector<bool> rational_;
  std::vector<int> theta_;
};

/// Explores the ball of the given radius. When the chamber cap fires the
/// graph is marked truncated and complete_radius records what is still exact.
ChamberGraph explore(const BuildingParams& params, int radius, std::size_t cap_chambers = 5'000'000);

/// Weyl distance from chamber a to every chamber of the graph, propagated
/// along minimal galleries. Throws InvariantViolation if two minimal galleries
/// disagree. Entries are nullopt for unreachable chambers.
std::vector<std::optional<AffinePerm>> weyl_distances_from(const ChamberGraph& graph, int a);

AffinePerm weyl_distance(const ChamberGraph& graph, int a, int b);

}  // namespace gammalab

#endif  // GAMMALAB_BUILDING_HPP
