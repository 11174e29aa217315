#include "gammalab/gallery.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gammalab/errors.hpp"

namespace gammalab {

GalleryDAG build_gallery_dag(const ChamberGraph& graph) {
  GalleryDAG dag;
  dag.graph_ = &graph;
  const int n = graph.params.n;
  const std::size_t size = graph.size();
  dag.preds_.assign(size, {});
  dag.certified_.assign(size, false);
  dag.counts_.assign(size, 0);

  std::vector<int> order;
  for (std::size_t c = 0; c < size; ++c)
    if (graph.xf_exact(static_cast<int>(c))) order.push_back(static_cast<int>(c));
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return graph.dist_to_xf(a) < graph.dist_to_xf(b); });

  for (int c : order) {
    const int d = graph.dist_to_xf(c);
    if (d == 0) {
      dag.certified_[c] = true;
      dag.counts_[c] = 1;
      continue;
    }
    auto& preds = dag.preds_[c];
    for (int s = 0; s < n; ++s)
      for (int x : graph.adjacent(c, s))
        if (graph.dist_to_xf(x) == d - 1) preds.push_back({x, s});
    std::sort(preds.begin(), preds.end(), [&](const Predecessor& a, const Predecessor& b) {
      return graph.key(a.chamber) < graph.key(b.chamber);
    });
    if (preds.empty()) throw InvariantViolation("certified chamber without an admissible predecessor");

    bool cert = true;
    std::uint64_t count = 0;
    for (const auto& p : preds) {
      if (!graph.xf_exact(p.chamber)) throw InvariantViolation("predecessor left the certified region");
      cert = cert && dag.certified_[p.chamber] && graph.panel_stats(c, p.type).has_value();
      const std::uint64_t add = dag.counts_[p.chamber];
      count = count > std::numeric_limits<std::uint64_t>::max() - add
                  ? std::numeric_limits<std::uint64_t>::max()
                  : count + add;
    }
    dag.certified_[c] = cert;
    dag.counts_[c] = count;
  }
  return dag;
}

GalleryEnumeration enumerate_galleries(const GalleryDAG& dag, int terminal, std::size_t cap) {
  const ChamberGraph& graph = dag.graph();
  if (!dag.in_region(terminal)) throw RegionError("terminal chamber outside the certified region");
  GalleryEnumeration out;
  const int d = graph.dist_to_xf(terminal);

  // Path from the terminal chamber backwards; reversed into a gallery at the leaves.
  std::vector<int> path{terminal};
  std::vector<int> types;
  std::vector<std::size_t> next{0};
  if (d == 0) {
    out.galleries.push_back(Gallery{{terminal}, {}});
    return out;
  }
  while (!next.empty()) {
    const int c = path.back();
    const auto& preds = dag.predecessors(c);
    if (graph.dist_to_xf(c) == 0) {
      if (out.galleries.size() >= cap) {
        out.truncated = true;
        break;
      }
      Gallery g;
      g.chambers.assign(path.rbegin(), path.rend());
      g.panel_types.assign(types.rbegin(), types.rend());
      out.galleries.push_back(std::move(g));
      path.pop_back();
      next.pop_back();
      if (!types.empty()) types.pop_back();
      continue;
    }
    std::size_t& i = next.back();
    if (i == preds.size()) {
      path.pop_back();
      next.pop_back();
      if (!types.empty()) types.pop_back();
      continue;
    }
    const Predecessor p = preds[i++];
    path.push_back(p.chamber);
    types.push_back(p.type);
    next.push_back(0);
  }
  return out;
}

void validate_gallery(const ChamberGraph& graph, const Gallery& g) {
  if (g.chambers.size() != g.panel_types.size() + 1)
    throw InvariantViolation("gallery has mismatched chamber and panel counts");
  if (!graph.rational(g.chambers.front())) throw InvariantViolation("gallery does not start in X_F");
  for (int i = 0; i < g.length(); ++i) {
    const auto& adj = graph.adjacent(g.chambers[i], g.panel_types[i]);
    if (std::find(adj.begin(), adj.end(), g.chambers[i + 1]) == adj.end())
      throw InvariantViolation("consecutive gallery chambers are not adjacent");
  }
  for (int i = 0; i <= g.length(); ++i)
    if (graph.dist_to_xf(g.chambers[i]) != i)
      throw InvariantViolation("gallery chamber " + std::to_string(i) + " is at distance " +
                               std::to_string(graph.dist_to_xf(g.chambers[i])) + " from X_F");
}

std::vector<PanelStats> gallery_panel_stats(const ChamberGraph& graph, const Gallery& g) {
  std::vector<PanelStats> stats;
  for (int i = 0; i < g.length(); ++i) {
    auto st = graph.panel_stats(g.chambers[i], g.panel_types[i]);
    if (!st) throw RegionError("panel statistics not certified along the gallery");
    if (st->d != i) throw InvariantViolation("panel distance disagrees with gallery position");
    stats.push_back(*st);
  }
  return stats;
}

HeckeElem gallery_hecke_element(const ChamberGraph& graph, const Gallery& g) {
  const auto stats = gallery_panel_stats(graph, g);
  return gallery_element(stats, HeckeAlgebra{graph.params.n, graph.params.q0});
}

Gallery theta(const ChamberGraph& graph, const Gallery& g) {
  Gallery out;
  out.panel_types = g.panel_types;
  for (int c : g.chambers) {
    const int t = graph.theta_index(c);
    if (t < 0) throw RegionError("theta image of a gallery chamber lies outside the ball");
    out.chambers.push_back(t);
  }
  return out;
}

std::string hex_key(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char ch : key) {
    out += digits[ch >> 4];
    out += digits[ch & 15];
  }
  return out;
}

nlohmann::json to_json(const ChamberGraph& graph, const Gallery& g) {
  nlohmann::json keys = nlohmann::json::array();
  for (int c : g.chambers) keys.push_back(hex_key(graph.key(c)));
  return {{"chambers", keys}, {"panel_types", g.panel_types}};
}

}  // namespace gammalab
