#ifndef GAMMALAB_GALLERY_HPP
#define GAMMALAB_GALLERY_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

#include "json.hpp"

#include "gammalab/building.hpp"
#include "gammalab/hecke.hpp"

namespace gammalab {

/// A gallery (C_0, ..., C_d) of graph indices; panel_types[i] is the type of C_i ∩ C_{i+1}.
struct Gallery {
  std::vector<int> chambers;
  std::vector<int> panel_types;

  int length() const { return static_cast<int>(panel_types.size()); }
  int terminal() const { return chambers.back(); }
  friend bool operator==(const Gallery&, const Gallery&) = default;
};

struct Predecessor {
  int chamber;
  int type;
};

/// Predecessor lists of the theta-admissible galleries: every path from a
/// rational chamber to C through the DAG realizes d(C, X_F), and conversely.
///
/// Lists exist only for chambers whose distance to X_F is certified; the
/// certified set is closed under taking predecessors.
class GalleryDAG {
 public:
  const ChamberGraph& graph() const { return *graph_; }
  /// Sorted by predecessor key.
  const std::vector<Predecessor>& predecessors(int c) const { return preds_[c]; }
  bool in_region(int c) const { return graph_->xf_exact(c); }
  /// Every panel along every admissible gallery ending at c has certified statistics.
  bool gallery_certified(int c) const { return certified_[c]; }
  /// Number of admissible galleries ending at c, saturating at UINT64_MAX.
  std::uint64_t gallery_count(int c) const { return counts_[c]; }

  friend GalleryDAG build_gallery_dag(const ChamberGraph& graph);

 private:
  const ChamberGraph* graph_ = nullptr;
  std::vector<std::vector<Predecessor>> preds_;
  std::vector<bool> certified_;
  std::vector<std::uint64_t> counts_;
};

/// The graph must outlive the DAG.
GalleryDAG build_gallery_dag(const ChamberGraph& graph);

struct GalleryEnumeration {
  std::vector<Gallery> galleries;
  bool truncated = false;
};

/// Depth-first from the terminal chamber, predecessors in key order, stopping after `cap` galleries.
GalleryEnumeration enumerate_galleries(const GalleryDAG& dag, int terminal, std::size_t cap);

/// Throws InvariantViolation naming the first broken gallery property.
void validate_gallery(const ChamberGraph& graph, const Gallery& g);

/// Statistics of D_0, ..., D_{d-1}. Throws RegionError if a panel is not certified.
std::vector<PanelStats> gallery_panel_stats(const ChamberGraph& graph, const Gallery& g);

/// e_G = e_{D_{d-1}} * ... * e_{D_0}.
HeckeElem gallery_hecke_element(const ChamberGraph& graph, const Gallery& g);

/// Chamberwise theta. Throws RegionError if an image leaves the ball.
Gallery theta(const ChamberGraph& graph, const Gallery& g);

/// {chambers: [keys as hex], panel_types: [...]}.
nlohmann::json to_json(const ChamberGraph& graph, const Gallery& g);

/// Lowercase hex rendering of a binary chamber key.
std::string hex_key(const std::string& key);

}  // namespace gammalab

#endif  // GAMMALAB_GALLERY_HPP
