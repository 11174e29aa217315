#ifndef GAMMALAB_GAMMA_HPP
#define GAMMALAB_GAMMA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammalab/gallery.hpp"

namespace gammalab {

struct GammaGenerator {
  HeckeElem element;
  /// element = e_{second}^{-1} * e_{first}; both galleries end at the same chamber.
  Gallery first;
  Gallery second;
};

/// Generators of the radius-truncated group, sorted by canonical Hecke key.
struct GammaGenerators {
  int radius = 0;
  int n = 0;
  int q0 = 0;
  std::vector<GammaGenerator> generators;
  bool truncated = false;
  std::size_t terminal_chambers = 0;
  /// Chambers of the ball left out because some panel below them is uncertified.
  std::size_t uncertified_chambers = 0;
  std::size_t galleries_enumerated = 0;
};

enum class Triviality { trivial, nontrivial, inconclusive };

std::string to_string(Triviality t);

/// For each gallery-certified terminal chamber, quotients of every admissible
/// gallery by the enumeration-first one; identities dropped, duplicates merged.
GammaGenerators gamma_generators(const GalleryDAG& dag, int radius, std::size_t cap_galleries);

/// Empty and untruncated is trivial; empty and truncated is inconclusive.
Triviality is_trivial_at_radius(const GammaGenerators& gens);

/// Recomputes e_{second}^{-1} * e_{first} from the witness galleries.
HeckeElem recompute_from_witness(const ChamberGraph& graph, const GammaGenerator& g);

nlohmann::json to_json(const ChamberGraph& graph, const GammaGenerators& gens);

}  // namespace gammalab

#endif  // GAMMALAB_GAMMA_HPP
