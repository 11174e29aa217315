#include "gammalab/module_lab.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gammalab/errors.hpp"
#include "gammalab/exact_kernel.hpp"

namespace gammalab {

namespace {

RatMatrix identity(int m) {
  RatMatrix id = RatMatrix::Constant(m, m, Rat(0));
  for (int i = 0; i < m; ++i) id(i, i) = Rat(1);
  return id;
}

RatMatrix scalar(int m, const Rat& c) { return c * identity(m); }

std::string render(const RatMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os.str() + ']';
}

std::string stats_key(const PanelStats& st) {
  return std::to_string(st.gen) + ':' + std::to_string(st.minus) + ',' + std::to_string(st.plus);
}

}  // namespace

std::optional<RelationFailure> check_relations(const HModule& mod) {
  const Rat q(mod.q0 * mod.q0);
  const RatMatrix id = identity(mod.dim);
  const CoxeterSystem cox = make_affine_weyl(mod.n);
  for (int i = 0; i < mod.n; ++i) {
    const RatMatrix& a = mod.generators[i];
    const RatMatrix res = (a + id) * (a - q * id);
    if (!is_exact_zero(res)) return RelationFailure{"quadratic", i, i, res};
  }
  for (int i = 0; i < mod.n; ++i) {
    for (int j = i + 1; j < mod.n; ++j) {
      const RatMatrix& a = mod.generators[i];
      const RatMatrix& b = mod.generators[j];
      RatMatrix res;
      switch (cox.order(i, j)) {
        case 2: res = a * b - b * a; break;
        case 3: res = a * b * a - b * a * b; break;
        default: continue;
      }
      if (!is_exact_zero(res)) return RelationFailure{"braid", i, j, res};
    }
  }
  return std::nullopt;
}

HModule load_module(const nlohmann::json& j) {
  HModule mod;
  try {
    mod.n = j.at("n").get<int>();
    mod.q0 = j.at("q0").get<int>();
    mod.dim = j.at("dim").get<int>();
    if (mod.n < 2) throw ValidationError("module rank n must be at least 2");
    if (!ResidueField::supported(mod.q0)) throw ValidationError("unsupported q0");
    if (mod.dim < 0) throw ValidationError("module dimension must be non-negative");
    const auto& gens = j.at("generators");
    for (int i = 0; i < mod.n; ++i) {
      const auto& rows = gens.at("s" + std::to_string(i));
      if (static_cast<int>(rows.size()) != mod.dim)
        throw ValidationError("generator s" + std::to_string(i) + " has the wrong number of rows");
      RatMatrix a(mod.dim, mod.dim);
      for (int r = 0; r < mod.dim; ++r) {
        if (static_cast<int>(rows[r].size()) != mod.dim)
          throw ValidationError("generator s" + std::to_string(i) + " is not square");
        for (int c = 0; c < mod.dim; ++c) {
          const auto& x = rows[r][c];
          a(r, c) = x.is_string() ? Rat::parse(x.get<std::string>()) : Rat(x.get<long>());
        }
      }
      mod.generators.push_back(std::move(a));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed module description: ") + e.what());
  }
  if (auto fail = check_relations(mod)) {
    throw ValidationError(fail->relation + " relation fails for (s" + std::to_string(fail->i) + ", s" +
                          std::to_string(fail->j) + "); residual " + render(fail->residual));
  }
  return mod;
}

HModule load_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open module file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("module file is not valid JSON: " + std::string(e.what()));
  }
  return load_module(j);
}

nlohmann::json to_json(const HModule& mod) {
  nlohmann::json gens = nlohmann::json::object();
  for (int i = 0; i < mod.n; ++i) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < mod.dim; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < mod.dim; ++c) row.push_back(mod.generators[i](r, c).to_string());
      rows.push_back(row);
    }
    gens["s" + std::to_string(i)] = rows;
  }
  return {{"n", mod.n}, {"q0", mod.q0}, {"dim", mod.dim}, {"generators", gens}};
}

HModule builtin_module(const std::string& name, int n, int q0) {
  Rat value;
  if (name == "trivial") {
    value = Rat(q0 * q0);
  } else if (name == "sign") {
    value = Rat(-1);
  } else {
    throw ValidationError("unknown builtin module '" + name + "'");
  }
  HModule mod{n, q0, 1, {}};
  for (int i = 0; i < n; ++i) mod.generators.push_back(scalar(1, value));
  return mod;
}

RatMatrix evaluate(const HModule& mod, const HeckeElem& h) {
  if (!(h.algebra() == mod.algebra())) throw DomainError("Hecke element and module disagree on n or q0");
  RatMatrix out = RatMatrix::Constant(mod.dim, mod.dim, Rat(0));
  for (const auto& [w, c] : h.terms()) {
    RatMatrix term = identity(mod.dim);
    for (int i : w.reduced_word()) term = term * mod.generators[i];
    out += c * term;
  }
  return out;
}

RatMatrix contragredient(const HModule& mod, const HeckeElem& h) {
  return evaluate(mod, anti_involution(h)).transpose();
}

FixedSpace gamma_fixed_dim(const HModule& mod, const std::vector<HeckeElem>& generators) {
  FixedSpace out;
  if (mod.dim == 0) {
    out.basis = RatMatrix(0, 0);
    return out;
  }
  const RatMatrix id = identity(mod.dim);
  RatMatrix stacked(static_cast<Eigen::Index>(generators.size()) * mod.dim, mod.dim);
  for (std::size_t k = 0; k < generators.size(); ++k)
    stacked.middleRows(static_cast<Eigen::Index>(k) * mod.dim, mod.dim) = contragredient(mod, generators[k]) - id;
  if (generators.empty()) {
    out.dim = mod.dim;
    out.basis = id;
    return out;
  }
  KernelResult ker = exact_kernel(stacked);
  out.dim = static_cast<int>(ker.basis.cols());
  out.basis = std::move(ker.basis);
  return out;
}

FixedSpace gamma_fixed_dim(const HModule& mod, const GammaGenerators& gens) {
  std::vector<HeckeElem> elems;
  for (const auto& g : gens.generators) elems.push_back(g.element);
  return gamma_fixed_dim(mod, elems);
}

DistributionFunction reconstruct_f(const HModule& mod, const RatVector& m, const GalleryDAG& dag) {
  const ChamberGraph& graph = dag.graph();
  if (m.size() != mod.dim) throw DomainError("vector length differs from the module dimension");
  DistributionFunction f;
  f.values.assign(graph.size(), std::nullopt);

  std::map<std::string, RatMatrix> panel_action;
  auto action = [&](const PanelStats& st) -> const RatMatrix& {
    const std::string k = stats_key(st);
    auto it = panel_action.find(k);
    if (it == panel_action.end())
      it = panel_action.emplace(k, contragredient(mod, panel_element(st, mod.algebra()))).first;
    return it->second;
  };

  std::vector<int> order;
  for (std::size_t c = 0; c < graph.size(); ++c)
    if (dag.gallery_certified(static_cast<int>(c))) order.push_back(static_cast<int>(c));
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return graph.dist_to_xf(a) < graph.dist_to_xf(b); });

  for (int c : order) {
    if (graph.dist_to_xf(c) == 0) {
      f.values[c] = m;
      continue;
    }
    std::optional<RatVector> value;
    for (const auto& p : dag.predecessors(c)) {
      const RatVector cand = action(*graph.panel_stats(c, p.type)) * *f.values[p.chamber];
      if (!value) {
        value = cand;
      } else if (!(*value == cand)) {
        throw DomainError("admissible galleries ending at one chamber disagree: the vector is not fixed");
      }
    }
    f.values[c] = std::move(value);
  }
  return f;
}

LocalRelationReport check_local_relation(const HModule& mod, const DistributionFunction& f,
                                         const ChamberGraph& graph) {
  LocalRelationReport rep;
  const HeckeAlgebra alg = mod.algebra();
  std::vector<RatMatrix> gen_action;
  for (int s = 0; s < mod.n; ++s) gen_action.push_back(contragredient(mod, HeckeElem::generator(alg, s)));
  const RatMatrix id = identity(mod.dim);

  for (std::size_t ci = 0; ci < graph.size(); ++ci) {
    const int c = static_cast<int>(ci);
    if (!f.defined(c)) continue;
    for (int s = 0; s < mod.n; ++s) {
      if (!graph.panel_complete(c, s)) continue;
      const std::vector<int> members = graph.panel_chambers(c, s);
      bool all = true;
      for (int x : members) all = all && f.defined(x);
      if (!all) continue;

      ++rep.panel_sum_checked;
      RatVector rhs = RatVector::Constant(mod.dim, Rat(0));
      for (int x : graph.adjacent(c, s)) rhs += *f.values[x];
      const RatVector lhs = gen_action[s] * *f.values[c];
      if (!(lhs == rhs)) rep.violations.push_back({c, s, "panel-sum", lhs, rhs});

      // Panel-level equations, once per panel from its first member.
      if (members.front() != c) continue;
      const auto st = graph.panel_stats(c, s);
      if (!st) continue;
      ++rep.panels_checked;
      std::optional<RatVector> near, far;
      bool constant = true;
      for (int x : members) {
        const bool is_near = graph.dist_to_xf(x) == st->d;
        auto& slot = is_near ? near : far;
        if (!slot) {
          slot = *f.values[x];
        } else if (!(*slot == *f.values[x])) {
          rep.violations.push_back({x, s, is_near ? "near-constant" : "far-constant", *f.values[x], *slot});
          constant = false;
        }
      }
      if (!constant) continue;
      const Rat plus(st->plus), minus(st->minus);
      const RatVector to_far = (gen_action[s] - Rat(st->minus - 1) * id) * *near / plus;
      if (!(to_far == *far)) {
        rep.violations.push_back({c, s, "near-to-far", *far, to_far});
        continue;
      }
      ++rep.far_to_near_checked;
      const RatVector to_near = (gen_action[s] - Rat(st->plus - 1) * id) * *far / minus;
      if (!(to_near == *near)) rep.violations.push_back({c, s, "far-to-near", *near, to_near});
    }
  }
  return rep;
}

}  // namespace gammalab
