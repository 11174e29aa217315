#include "gammalab/gamma.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

std::string stats_signature(const std::vector<PanelStats>& stats) {
  std::string sig;
  for (const auto& st : stats) {
    sig += std::to_string(st.gen) + ':' + std::to_string(st.minus) + ',' + std::to_string(st.plus) + ';';
  }
  return sig;
}

// e_G^{-1} through the factor inverses of the panel elements.
HeckeElem gallery_inverse(const std::vector<PanelStats>& stats, HeckeAlgebra alg) {
  std::vector<HeckeElem> factors;
  for (auto it = stats.rbegin(); it != stats.rend(); ++it) factors.push_back(panel_element(*it, alg));
  return hecke_inverse_of_panel_product(factors, alg);
}

}  // namespace

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::trivial: return "trivial";
    case Triviality::nontrivial: return "nontrivial";
    case Triviality::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

GammaGenerators gamma_generators(const GalleryDAG& dag, int radius, std::size_t cap_galleries) {
  const ChamberGraph& graph = dag.graph();
  const HeckeAlgebra alg{graph.params.n, graph.params.q0};
  GammaGenerators out;
  out.radius = radius;
  out.n = alg.n;
  out.q0 = alg.q0;
  out.truncated = graph.truncated;

  std::unordered_map<std::string, HeckeElem> element_cache;
  std::unordered_map<std::string, HeckeElem> inverse_cache;
  auto element_of = [&](const std::vector<PanelStats>& stats) -> const HeckeElem& {
    const std::string sig = stats_signature(stats);
    auto it = element_cache.find(sig);
    if (it == element_cache.end()) it = element_cache.emplace(sig, gallery_element(stats, alg)).first;
    return it->second;
  };
  auto inverse_of = [&](const std::vector<PanelStats>& stats) -> const HeckeElem& {
    const std::string sig = stats_signature(stats);
    auto it = inverse_cache.find(sig);
    if (it == inverse_cache.end()) it = inverse_cache.emplace(sig, gallery_inverse(stats, alg)).first;
    return it->second;
  };

  std::map<std::string, GammaGenerator> found;
  for (int c : graph.sorted_by_key()) {
    if (!dag.in_region(c)) continue;
    if (!dag.gallery_certified(c)) {
      ++out.uncertified_chambers;
      continue;
    }
    ++out.terminal_chambers;
    if (dag.gallery_count(c) < 2) {
      ++out.galleries_enumerated;
      continue;
    }
    GalleryEnumeration en = enumerate_galleries(dag, c, cap_galleries);
    out.truncated = out.truncated || en.truncated;
    out.galleries_enumerated += en.galleries.size();
    const Gallery& ref = en.galleries.front();
    const auto ref_stats = gallery_panel_stats(graph, ref);
    const std::string ref_sig = stats_signature(ref_stats);
    const HeckeElem& ref_inv = inverse_of(ref_stats);
    std::map<std::string, bool> seen_sig{{ref_sig, true}};
    for (std::size_t i = 1; i < en.galleries.size(); ++i) {
      const auto stats = gallery_panel_stats(graph, en.galleries[i]);
      // Galleries with equal statistics give equal elements.
      if (!seen_sig.emplace(stats_signature(stats), true).second) continue;
      HeckeElem gen = hecke_mul(ref_inv, element_of(stats));
      if (gen.is_one()) continue;
      std::string key = gen.canonical_key();
      found.try_emplace(std::move(key), GammaGenerator{std::move(gen), en.galleries[i], ref});
    }
  }
  for (auto& [k, g] : found) out.generators.push_back(std::move(g));
  return out;
}

Triviality is_trivial_at_radius(const GammaGenerators& gens) {
  if (!gens.generators.empty()) return Triviality::nontrivial;
  return gens.truncated ? Triviality::inconclusive : Triviality::trivial;
}

HeckeElem recompute_from_witness(const ChamberGraph& graph, const GammaGenerator& g) {
  if (g.first.terminal() != g.second.terminal())
    throw InvariantViolation("witness galleries end at different chambers");
  const HeckeAlgebra alg{graph.params.n, graph.params.q0};
  const auto second = gallery_panel_stats(graph, g.second);
  return hecke_mul(gallery_inverse(second, alg), gallery_hecke_element(graph, g.first));
}

nlohmann::json to_json(const ChamberGraph& graph, const GammaGenerators& gens) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& g : gens.generators) {
    list.push_back({{"element", g.element.to_json()},
                    {"witness", {{"first", to_json(graph, g.first)}, {"second", to_json(graph, g.second)}}}});
  }
  return {{"radius", gens.radius},
          {"n", gens.n},
          {"q0", gens.q0},
          {"generator_count", gens.generators.size()},
          {"generators", list},
          {"truncated", gens.truncated},
          {"terminal_chambers", gens.terminal_chambers},
          {"uncertified_chambers", gens.uncertified_chambers},
          {"galleries_enumerated", gens.galleries_enumerated},
          {"status", to_string(is_trivial_at_radius(gens))}};
}

}  // namespace gammalab
