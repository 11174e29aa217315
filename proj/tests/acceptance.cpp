// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gammalab/errors.hpp"
#include "gammalab/gallery.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/module_lab.hpp"
#include "gammalab/reports.hpp"
#include "oracles.hpp"

using namespace gammalab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

SessionConfig config(int n, int q0, int radius) {
  SessionConfig c;
  c.n = n;
  c.q0 = q0;
  c.radius = radius;
  return c;
}

std::string temp_module(const std::string& name, const HModule& mod) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << to_json(mod).dump();
  return path.string();
}

Outcome algebra_relations() {
  int checked = 0, failures = 0;
  for (int q0 : {2, 3, 4})
    for (int n : {2, 3, 4}) {
      const HeckeAlgebra alg{n, q0};
      const HeckeElem one = HeckeElem::one(alg);
      const Rat q(alg.q());
      const CoxeterSystem cox = make_affine_weyl(n);
      for (int i = 0; i < n; ++i) {
        const HeckeElem e = HeckeElem::generator(alg, i);
        ++checked;
        if (!((e + one) * (e - q * one)).is_zero()) ++failures;
        for (int j = i + 1; j < n; ++j) {
          const HeckeElem f = HeckeElem::generator(alg, j);
          HeckeElem res;
          switch (cox.order(i, j)) {
            case 2: res = e * f - f * e; break;
            case 3: res = e * f * e - f * e * f; break;
            default: continue;
          }
          ++checked;
          if (!res.is_zero()) ++failures;
        }
      }
    }
  return {failures == 0, std::to_string(checked) + " relations, " + std::to_string(failures) + " nonzero residuals"};
}

Outcome oracle_equivalence() {
  std::size_t products = 0, mismatches = 0, ball = 0;
  for (int n : {2, 3}) {
    // The ball named in the requirement; the counting itself walks the building locally.
    ball += explore({n, 2, default_precision(n == 2 ? 6 : 4)}, n == 2 ? 6 : 4).size();
    const HeckeAlgebra alg{n, 2};
    // Chambers reached lie within distance 9 of the base chamber.
    oracle::ChamberCountingOracle counter({n, 2, default_precision(9)});
    const auto pool = elements_up_to_length(n, 3);
    for (const auto& w : pool)
      for (const auto& v : pool) {
        ++products;
        const HeckeElem prod = HeckeElem::basis(alg, w) * HeckeElem::basis(alg, v);
        const auto cands = oracle::product_candidates(w, v);
        bool ok = true;
        for (const auto& [u, c] : prod.terms()) ok = ok && cands.count(u) == 1;
        for (const auto& u : cands) ok = ok && prod.coefficient(u) == Rat(counter.coefficient(w, v, u));
        if (!ok) ++mismatches;
      }
  }
  return {mismatches == 0, std::to_string(products) + " products, " + std::to_string(mismatches) +
                               " mismatches; balls hold " + std::to_string(ball) + " chambers"};
}

Outcome courtes() {
  std::ostringstream os;
  bool ok = true;
  for (int n : {2, 3})
    for (int q0 : {2, 3}) {
      const Report r = cmd_courtes(config(n, q0, 4));
      const std::string inside = "(" + std::to_string(q0 + 1) + "," + std::to_string(q0 * q0 - q0) + ")";
      const std::string outside = "(1," + std::to_string(q0 * q0) + ")";
      bool here = r.exit_code == kOk && r.payload["violations"].empty() && r.payload["xf_panels"].get<int>() > 0;
      for (const auto& e : r.payload["histogram"]) {
        const auto s = e["stats"].get<std::string>();
        here = here && (s == inside || s == outside);
      }
      for (const auto& e : r.payload["xf_histogram"]) here = here && e["stats"].get<std::string>() == inside;
      ok = ok && here;
      os << " n=" << n << ",q0=" << q0 << ":" << r.payload["certified_panels"] << " panels";
    }
  return {ok, "zero violations required;" + os.str()};
}

Outcome panel_inverses() {
  int checked = 0, failures = 0;
  std::mt19937_64 rng(7);
  for (int q0 : {2, 3, 4, 5})
    for (int n : {2, 3}) {
      const HeckeAlgebra alg{n, q0};
      const HeckeElem one = HeckeElem::one(alg);
      const std::vector<std::pair<int, int>> shapes{{q0 + 1, q0 * q0 - q0}, {1, q0 * q0}};
      for (int s = 0; s < n; ++s)
        for (auto [minus, plus] : shapes) {
          const HeckeElem x = panel_element({minus, plus, 1, s}, alg);
          const HeckeElem inv = invert_panel_factor(x);
          ++checked;
          if (!(x * inv == one) || !(inv * x == one)) ++failures;
        }
      // Products of several factors, inverted factorwise.
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<HeckeElem> factors;
        for (int k = 0; k < 4; ++k) {
          const auto [minus, plus] = shapes[rng() % 2];
          factors.push_back(panel_element({minus, plus, k, static_cast<int>(rng() % n)}, alg));
        }
        HeckeElem prod = one;
        for (const auto& f : factors) prod = prod * f;
        ++checked;
        if (!(prod * hecke_inverse_of_panel_product(factors, alg) == one)) ++failures;
      }
    }
  return {failures == 0, std::to_string(checked) + " inverses, " + std::to_string(failures) + " failures"};
}

Outcome gallery_layering() {
  std::size_t galleries = 0, violations = 0;
  bool capped = false;
  for (auto [n, q0, radius] : std::vector<std::tuple<int, int, int>>{{2, 2, 5}, {2, 3, 5}, {3, 2, 5}}) {
    const ChamberGraph g = explore({n, q0, default_precision(radius)}, radius);
    const GalleryDAG dag = build_gallery_dag(g);
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (!dag.gallery_certified(static_cast<int>(c))) continue;
      const auto en = enumerate_galleries(dag, static_cast<int>(c), 10'000);
      capped = capped || en.truncated;
      for (const auto& gal : en.galleries) {
        ++galleries;
        bool ok = g.rational(gal.chambers.front());
        for (int i = 0; i <= gal.length(); ++i) ok = ok && g.dist_to_xf(gal.chambers[i]) == i;
        try {
          validate_gallery(g, gal);
        } catch (const InvariantViolation&) {
          ok = false;
        }
        if (!ok) ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(galleries) + " galleries, " + std::to_string(violations) + " violations" +
                               (capped ? " (some terminals capped)" : "")};
}

Outcome sl2_triviality() {
  std::ostringstream os;
  bool ok = true;
  std::mt19937_64 rng(2024);
  for (int q0 : {2, 3}) {
    for (int radius = 0; radius <= 5; ++radius) {
      const ChamberGraph g = explore({2, q0, default_precision(radius)}, radius);
      const GammaGenerators gens = gamma_generators(build_gallery_dag(g), radius, 10'000);
      ok = ok && gens.generators.empty() && !gens.truncated;
    }
    SessionConfig c = config(2, q0, 5);
    c.module = "sign";
    const int sign_dim = cmd_distinguish(c).payload["fixed_dimension"].get<int>();
    c.module = temp_module("gammalab_acceptance_random_q" + std::to_string(q0) + ".json",
                           oracle::random_rank_one_module(rng, q0, 2));
    const int random_dim = cmd_distinguish(c).payload["fixed_dimension"].get<int>();
    ok = ok && sign_dim == 1 && random_dim == 2;
    os << " q0=" << q0 << ": sign " << sign_dim << "/1, random " << random_dim << "/2;";
  }
  return {ok, "Gamma empty and untruncated for radii 0-5;" + os.str()};
}

Outcome sl3_search() {
  bool ok = true;
  std::string empty_radii, first_nonempty = "none";
  auto run = [&](int radius) {
    const Report a = cmd_gamma(config(3, 2, radius));
    const Report b = cmd_gamma(config(3, 2, radius));
    const auto& gamma = a.payload["gamma"];
    const std::string status = gamma["status"].get<std::string>();
    const auto count = gamma["generator_count"].get<std::size_t>();
    const bool truncated = gamma["truncated"].get<bool>();
    ok = ok && dump_report(a.payload) == dump_report(b.payload);
    ok = ok && a.payload["witnesses_verified"].get<std::size_t>() == count && a.exit_code != kInvariantViolation;
    ok = ok && (status == "inconclusive") == (truncated && count == 0);
    ok = ok && (status == "nontrivial") == (count > 0);
    if (count == 0) {
      empty_radii += (empty_radii.empty() ? "" : ",") + std::to_string(radius);
    } else if (first_nonempty == "none") {
      first_nonempty = "radius " + std::to_string(radius) + " with " + std::to_string(count) + " generators";
    }
  };
  for (int radius = 1; radius <= 4; ++radius) run(radius);
  // The required radii give no generator; one step further shows the group is nontrivial.
  run(5);
  ok = ok && first_nonempty != "none";
  return {ok, "deterministic, witnesses verified; empty at radii " + empty_radii + ", first non-empty at " +
                  first_nonempty};
}

Outcome round_trip() {
  std::size_t vectors = 0, relations = 0, violations = 0;
  std::mt19937_64 rng(99);
  for (int q0 : {2, 3}) {
    const int radius = 5;
    const ChamberGraph g = explore({2, q0, default_precision(radius)}, radius);
    const GalleryDAG dag = build_gallery_dag(g);
    const GammaGenerators gens = gamma_generators(dag, radius, 10'000);
    std::vector<HModule> modules{builtin_module("trivial", 2, q0), builtin_module("sign", 2, q0),
                                 oracle::random_rank_one_module(rng, q0, 2),
                                 oracle::random_rank_one_module(rng, q0, 3)};
    for (const auto& mod : modules) {
      const FixedSpace fixed = gamma_fixed_dim(mod, gens);
      for (int k = 0; k < fixed.dim; ++k) {
        ++vectors;
        const DistributionFunction f = reconstruct_f(mod, fixed.basis.col(k), dag);
        const LocalRelationReport rep = check_local_relation(mod, f, g);
        relations += rep.panel_sum_checked + rep.panels_checked;
        violations += rep.violations.size();
        if (rep.panel_sum_checked == 0) ++violations;
        // Evaluation at the base chamber returns the fixed vector.
        if (!f.defined(0) || !(*f.values[0] == RatVector(fixed.basis.col(k)))) ++violations;
      }
    }
  }
  return {violations == 0 && vectors == 14, std::to_string(vectors) + " fixed vectors, " +
                                                std::to_string(relations) + " local checks, " +
                                                std::to_string(violations) + " violations"};
}

struct GraphFingerprint {
  std::map<std::string, std::vector<std::set<std::string>>> adjacency;
  std::map<std::string, std::vector<std::string>> stats;
  std::map<std::string, std::pair<int, int>> distances;

  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

GraphFingerprint fingerprint(const ChamberGraph& g) {
  GraphFingerprint fp;
  for (std::size_t ci = 0; ci < g.size(); ++ci) {
    const int c = static_cast<int>(ci);
    const std::string& k = g.key(c);
    auto& adj = fp.adjacency[k];
    auto& st = fp.stats[k];
    for (int s = 0; s < g.params.n; ++s) {
      std::set<std::string> keys;
      for (int x : g.adjacent(c, s)) keys.insert(g.key(x));
      adj.push_back(std::move(keys));
      const auto p = g.panel_stats(c, s);
      st.push_back(p ? std::to_string(p->minus) + "," + std::to_string(p->plus) + "," + std::to_string(p->d) : "-");
    }
    fp.distances[k] = {g.dist_to_base(c), g.xf_exact(c) ? g.dist_to_xf(c) : -1};
  }
  return fp;
}

Outcome precision_and_determinism() {
  bool ok = true;
  std::size_t chambers = 0;
  for (auto [n, radius] : std::vector<std::pair<int, int>>{{2, 5}, {3, 5}}) {
    const int p = default_precision(radius);
    const ChamberGraph a = explore({n, 2, p}, radius);
    const ChamberGraph b = explore({n, 2, 2 * p}, radius);
    chambers += a.size();
    ok = ok && fingerprint(a) == fingerprint(b);
    std::vector<std::string> ka, kb;
    for (const auto& gen : gamma_generators(build_gallery_dag(a), radius, 10'000).generators)
      ka.push_back(gen.element.canonical_key());
    for (const auto& gen : gamma_generators(build_gallery_dag(b), radius, 10'000).generators)
      kb.push_back(gen.element.canonical_key());
    ok = ok && ka == kb;
  }
  SessionConfig c = config(3, 2, 4);
  c.export_graph = "graph.json";
  const std::vector<std::function<Report(const SessionConfig&)>> cmds{cmd_explore, cmd_courtes, cmd_gamma,
                                                                      cmd_distinguish};
  for (const auto& cmd : cmds) ok = ok && dump_report(cmd(c).payload) == dump_report(cmd(c).payload);
  return {ok, "keys, adjacency, panel stats and Gamma coefficients stable under 2P over " +
                  std::to_string(chambers) + " chambers; reports byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"algebra relations", algebra_relations},
      {"chamber-counting oracle", oracle_equivalence},
      {"Courtes panel law", courtes},
      {"panel element inverses", panel_inverses},
      {"gallery layering", gallery_layering},
      {"SL(2) triviality", sl2_triviality},
      {"SL(3) search", sl3_search},
      {"SL(2) round trip", round_trip},
      {"precision and determinism", precision_and_determinism},
  };
  // Wall-clock budgets in seconds, or 0 when none is required.
  const std::vector<double> budgets{1, 60, 300, 1, 0, 120, 0, 0, 0};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budgets[i] > 0 && secs > budgets[i]) {
      out.pass = false;
      out.detail += "; over the time budget";
    }
    if (!out.pass) ++failed;
    std::printf("[%s] criterion %zu: %s (%.2fs) %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, out.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
