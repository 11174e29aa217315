#include "gammalab/reports.hpp"

#include <map>
#include <sstream>

#include "gammalab/errors.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/module_lab.hpp"

namespace gammalab {

namespace {

nlohmann::json conventions() {
  return {{"contragredient", "r~(h) = r(h^v)^T with (e_w)^v = e_{w^-1}"},
          {"panel_values", "f+ on the far side (d+1), f- on the near side (d)"},
          {"x_f", "theta-stable chambers"},
          {"scope", "all results hold at the stated exploration radius only"}};
}

nlohmann::json base_payload(const std::string& command, const SessionConfig& config) {
  return {{"command", command}, {"config", config.to_json()}, {"conventions", conventions()}};
}

nlohmann::json graph_summary(const ChamberGraph& g) {
  std::map<int, std::size_t> by_base, by_xf;
  std::size_t rational = 0, exact = 0, theta_missing = 0;
  for (std::size_t c = 0; c < g.size(); ++c) {
    const int ci = static_cast<int>(c);
    ++by_base[g.dist_to_base(ci)];
    if (g.xf_exact(ci)) {
      ++exact;
      ++by_xf[g.dist_to_xf(ci)];
    }
    if (g.rational(ci)) ++rational;
    if (g.theta_index(ci) < 0) ++theta_missing;
  }
  auto to_list = [](const std::map<int, std::size_t>& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [d, count] : m) arr.push_back({{"distance", d}, {"chambers", count}});
    return arr;
  };
  return {{"chambers", g.size()},
          {"rational_chambers", rational},
          {"certified_chambers", exact},
          {"theta_images_outside_ball", theta_missing},
          {"by_dist_to_base", to_list(by_base)},
          {"by_dist_to_xf_certified", to_list(by_xf)},
          {"truncated", g.truncated},
          {"complete_radius", g.complete_radius}};
}

std::string stats_label(const PanelStats& st) {
  return "(" + std::to_string(st.minus) + "," + std::to_string(st.plus) + ")";
}

bool panel_vertices_rational(const ChamberGraph& g, int c, int s) {
  const Panel p = panel_of(g.chamber(c), s);
  Chamber as_chamber{p.vertices};
  return is_rational(as_chamber);
}

HModule resolve_module(const SessionConfig& config) {
  HModule mod = (config.module == "trivial" || config.module == "sign")
                    ? builtin_module(config.module, config.n, config.q0)
                    : load_module_file(config.module);
  if (mod.n != config.n || mod.q0 != config.q0)
    throw ValidationError("module is for n=" + std::to_string(mod.n) + ", q0=" + std::to_string(mod.q0) +
                          " but the session uses n=" + std::to_string(config.n) +
                          ", q0=" + std::to_string(config.q0));
  return mod;
}

nlohmann::json vector_json(const RatVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i).to_string());
  return arr;
}

}  // namespace

void SessionConfig::validate() const {
  if (n < 2) throw ValidationError("--n must be at least 2");
  if (!ResidueField::supported(q0)) throw ValidationError("--q0 must be one of 2, 3, 4, 5");
  if (radius < 0) throw ValidationError("--radius must be non-negative");
  if (precision && *precision < 1) throw ValidationError("--precision must be positive");
  if (cap_galleries < 1) throw ValidationError("--cap-galleries must be positive");
  if (cap_chambers < 1) throw ValidationError("--cap-chambers must be positive");
}

nlohmann::json SessionConfig::to_json() const {
  return {{"n", n},
          {"q0", q0},
          {"radius", radius},
          {"precision", effective_precision()},
          {"precision_overridden", precision.has_value()},
          {"cap_galleries", cap_galleries},
          {"cap_chambers", cap_chambers},
          {"seed", seed}};
}

nlohmann::json graph_to_json(const ChamberGraph& g) {
  const std::vector<int> order = g.sorted_by_key();
  std::vector<int> rank(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  nlohmann::json chambers = nlohmann::json::array();
  for (int c : order) {
    nlohmann::json adj = nlohmann::json::array();
    for (int s = 0; s < g.params.n; ++s) {
      std::vector<int> ids;
      for (int x : g.adjacent(c, s)) ids.push_back(rank[x]);
      std::sort(ids.begin(), ids.end());
      adj.push_back(ids);
    }
    chambers.push_back({{"key", hex_key(g.key(c))},
                        {"adjacency", adj},
                        {"dist_to_base", g.dist_to_base(c)},
                        {"dist_to_xf", g.dist_to_xf(c)},
                        {"dist_to_xf_exact", g.xf_exact(c)},
                        {"rational", g.rational(c)}});
  }
  return {{"n", g.params.n}, {"q0", g.params.q0}, {"radius", g.radius}, {"chambers", chambers}};
}

Report cmd_explore(const SessionConfig& config) {
  config.validate();
  const ChamberGraph g = explore(config.building(), config.radius, config.cap_chambers);
  Report r;
  r.payload = base_payload("explore", config);
  r.payload["census"] = graph_summary(g);
  if (!config.export_graph.empty()) r.payload["graph"] = graph_to_json(g);
  r.exit_code = g.truncated ? kTruncated : kOk;
  return r;
}

Report cmd_courtes(const SessionConfig& config) {
  config.validate();
  const ChamberGraph g = explore(config.building(), config.radius, config.cap_chambers);
  const int q0 = config.q0;
  std::map<std::string, std::size_t> hist, xf_hist;
  std::size_t certified = 0, uncertified = 0, xf_panels = 0;
  nlohmann::json violations = nlohmann::json::array();
  for (int c : g.sorted_by_key()) {
    for (int s = 0; s < config.n; ++s) {
      if (!g.panel_complete(c, s) || g.panel_chambers(c, s).front() != c) continue;
      std::optional<PanelStats> st;
      try {
        st = g.panel_stats(c, s);
      } catch (const InvariantViolation& e) {
        violations.push_back({{"chamber", hex_key(g.key(c))}, {"type", s}, {"reason", e.what()}});
        continue;
      }
      if (!st) {
        ++uncertified;
        continue;
      }
      ++certified;
      ++hist[stats_label(*st)];
      if (!satisfies_courtes_law(*st, q0))
        violations.push_back({{"chamber", hex_key(g.key(c))}, {"type", s}, {"stats", stats_label(*st)},
                              {"reason", "outside the two admissible shapes"}});
      if (panel_vertices_rational(g, c, s)) {
        ++xf_panels;
        ++xf_hist[stats_label(*st)];
        if (st->d != 0 || st->minus != q0 + 1 || st->plus != q0 * q0 - q0)
          violations.push_back({{"chamber", hex_key(g.key(c))}, {"type", s}, {"stats", stats_label(*st)},
                                {"reason", "panel inside X_F without the (q0+1, q0^2-q0) shape"}});
      }
    }
  }
  auto hist_json = [](const std::map<std::string, std::size_t>& h) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : h) arr.push_back({{"stats", k}, {"panels", v}});
    return arr;
  };
  Report r;
  r.payload = base_payload("courtes", config);
  r.payload["census"] = graph_summary(g);
  r.payload["admissible_shapes"] = {stats_label({q0 + 1, q0 * q0 - q0, 0, 0}), stats_label({1, q0 * q0, 0, 0})};
  r.payload["certified_panels"] = certified;
  r.payload["uncertified_panels"] = uncertified;
  r.payload["histogram"] = hist_json(hist);
  r.payload["xf_panels"] = xf_panels;
  r.payload["xf_histogram"] = hist_json(xf_hist);
  r.payload["violations"] = violations;
  r.exit_code = !violations.empty() ? kInvariantViolation : (g.truncated ? kTruncated : kOk);
  return r;
}

Report cmd_gamma(const SessionConfig& config) {
  config.validate();
  const ChamberGraph g = explore(config.building(), config.radius, config.cap_chambers);
  const GalleryDAG dag = build_gallery_dag(g);
  const GammaGenerators gens = gamma_generators(dag, config.radius, config.cap_galleries);
  std::size_t verified = 0;
  for (const auto& gen : gens.generators)
    if (recompute_from_witness(g, gen) == gen.element) ++verified;
  Report r;
  r.payload = base_payload("gamma", config);
  r.payload["census"] = graph_summary(g);
  r.payload["gamma"] = to_json(g, gens);
  r.payload["witnesses_verified"] = verified;
  if (verified != gens.generators.size()) {
    r.exit_code = kInvariantViolation;
  } else {
    r.exit_code = gens.truncated ? kTruncated : kOk;
  }
  return r;
}

Report cmd_distinguish(const SessionConfig& config) {
  config.validate();
  const HModule mod = resolve_module(config);
  const ChamberGraph g = explore(config.building(), config.radius, config.cap_chambers);
  const GalleryDAG dag = build_gallery_dag(g);
  const GammaGenerators gens = gamma_generators(dag, config.radius, config.cap_galleries);
  const FixedSpace fixed = gamma_fixed_dim(mod, gens);

  nlohmann::json basis = nlohmann::json::array();
  for (Eigen::Index k = 0; k < fixed.basis.cols(); ++k) basis.push_back(vector_json(fixed.basis.col(k)));

  nlohmann::json residuals = nlohmann::json::array();
  bool residuals_zero = true;
  for (const auto& gen : gens.generators) {
    const RatMatrix act = contragredient(mod, gen.element);
    const RatMatrix res = act * fixed.basis - fixed.basis;
    const bool zero = is_exact_zero(res);
    residuals_zero = residuals_zero && zero;
    residuals.push_back({{"generator", gen.element.canonical_key()}, {"residual_zero", zero}});
  }

  Report r;
  r.payload = base_payload("distinguish", config);
  r.payload["module"] = to_json(mod);
  r.payload["gamma_status"] = to_string(is_trivial_at_radius(gens));
  r.payload["generator_count"] = gens.generators.size();
  r.payload["fixed_dimension"] = fixed.dim;
  r.payload["fixed_basis"] = basis;
  r.payload["residuals"] = residuals;
  r.payload["distinguished_at_radius"] = fixed.dim > 0;
  r.payload["caveat"] = "upper bound at radius " + std::to_string(config.radius);
  r.payload["truncated"] = gens.truncated;

  std::size_t violations = 0;
  if (config.reconstruct) {
    nlohmann::json checks = nlohmann::json::array();
    for (Eigen::Index k = 0; k < fixed.basis.cols(); ++k) {
      const DistributionFunction f = reconstruct_f(mod, fixed.basis.col(k), dag);
      const LocalRelationReport rep = check_local_relation(mod, f, g);
      violations += rep.violations.size();
      checks.push_back({{"basis_vector", k},
                        {"panel_sum_checked", rep.panel_sum_checked},
                        {"panels_checked", rep.panels_checked},
                        {"far_to_near_checked", rep.far_to_near_checked},
                        {"violations", rep.violations.size()}});
    }
    r.payload["reconstruction"] = checks;
  }
  if (!residuals_zero || violations > 0) {
    r.exit_code = kInvariantViolation;
  } else {
    r.exit_code = gens.truncated ? kTruncated : kOk;
  }
  return r;
}

std::string dump_report(const nlohmann::json& payload) { return payload.dump(2) + "\n"; }

std::string render_table(const std::string& command, const nlohmann::json& p) {
  std::ostringstream os;
  const auto& cfg = p.at("config");
  os << command << "  n=" << cfg.at("n") << " q0=" << cfg.at("q0") << " radius=" << cfg.at("radius")
     << " precision=" << cfg.at("precision") << "\n";
  if (p.contains("census")) {
    const auto& c = p.at("census");
    os << "chambers " << c.at("chambers") << "  rational " << c.at("rational_chambers") << "  certified "
       << c.at("certified_chambers") << (c.at("truncated").get<bool>() ? "  TRUNCATED" : "") << "\n";
    os << "  dist_to_base:";
    for (const auto& e : c.at("by_dist_to_base")) os << ' ' << e.at("distance") << ':' << e.at("chambers");
    os << "\n  dist_to_xf (certified):";
    for (const auto& e : c.at("by_dist_to_xf_certified")) os << ' ' << e.at("distance") << ':' << e.at("chambers");
    os << "\n";
  }
  if (command == "courtes") {
    os << "certified panels " << p.at("certified_panels") << "  uncertified " << p.at("uncertified_panels") << "\n";
    for (const auto& e : p.at("histogram"))
      os << "  " << e.at("stats").get<std::string>() << "  " << e.at("panels") << "\n";
    os << "panels inside X_F " << p.at("xf_panels") << "\n";
    for (const auto& e : p.at("xf_histogram"))
      os << "  " << e.at("stats").get<std::string>() << "  " << e.at("panels") << "\n";
    os << "violations " << p.at("violations").size() << "\n";
  } else if (command == "gamma") {
    const auto& g = p.at("gamma");
    os << "status " << g.at("status").get<std::string>() << "  generators " << g.at("generator_count")
       << "  witnesses verified " << p.at("witnesses_verified") << "\n";
    os << "terminal chambers " << g.at("terminal_chambers") << "  galleries " << g.at("galleries_enumerated")
       << (g.at("truncated").get<bool>() ? "  TRUNCATED" : "") << "\n";
    for (const auto& gen : g.at("generators")) {
      os << " ";
      for (const auto& t : gen.at("element")) {
        os << ' ' << t.at("coeff").get<std::string>() << "*e" << t.at("window").dump();
      }
      os << "\n";
    }
  } else if (command == "distinguish") {
    os << "gamma " << p.at("gamma_status").get<std::string>() << " (" << p.at("generator_count")
       << " generators)\n";
    os << "fixed dimension " << p.at("fixed_dimension") << "  (" << p.at("caveat").get<std::string>() << ")\n";
    for (const auto& v : p.at("fixed_basis")) os << "  " << v.dump() << "\n";
    if (p.contains("reconstruction"))
      for (const auto& c : p.at("reconstruction"))
        os << "  f[" << c.at("basis_vector") << "]: panel sums at " << c.at("panel_sum_checked")
           << " chamber-types, " << c.at("panels_checked") << " panels, violations " << c.at("violations") << "\n";
  }
  return os.str();
}

}  // namespace gammalab
