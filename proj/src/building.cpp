#include "gammalab/building.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

// Incremental row echelon over GF(q0^2); used to find a complement of the
// image of B in A / tA.
class Echelon {
 public:
  explicit Echelon(int n) : n_(n) {}

  // Adds v to the span; false if v was already in it.
  bool add(std::vector<FieldElem> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (!v[p].is_zero()) {
        const FieldElem f = v[p] / rows_[r][p];
        for (int k = 0; k < n_; ++k) v[k] -= f * rows_[r][k];
      }
    }
    for (int k = 0; k < n_; ++k) {
      if (!v[k].is_zero()) {
        rows_.push_back(std::move(v));
        pivots_.push_back(k);
        return true;
      }
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  int n_;
  std::vector<std::vector<FieldElem>> rows_;
  std::vector<int> pivots_;
};

FieldElem reduce_mod_t(const LaurentScalar& x, const ResidueField& field) {
  if (x.is_zero() || x.valuation() > 0) return field.zero();
  if (x.valuation() < 0) throw InvariantViolation("panel lattices do not form a chain");
  return x.leading_coefficient();
}

bool vertex_is_rational(const Vertex& v) {
  for (Eigen::Index j = 0; j < v.basis.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if (!v.basis(i, j).is_frobenius_fixed()) return false;
  return true;
}

}  // namespace

int default_precision(int radius) { return 2 * radius + 4; }

std::string Chamber::key() const {
  std::string k;
  for (const auto& v : vertices) k += v.key;
  return k;
}

std::string Panel::key() const {
  std::string k(1, static_cast<char>(type));
  for (const auto& v : vertices) k += v.key;
  return k;
}

Chamber make_chamber(std::vector<Vertex> vertices) {
  const int n = static_cast<int>(vertices.size());
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.type < b.type; });
  for (int i = 0; i < n; ++i)
    if (vertices[i].type != i) throw DomainError("a chamber needs exactly one vertex of each type");
  return Chamber{std::move(vertices)};
}

Chamber standard_chamber(const BuildingParams& params) {
  if (params.n < 2) throw DomainError("building of SL(n) needs n >= 2");
  const ResidueField& field = ResidueField::get(params.q0);
  std::vector<Vertex> vs;
  for (int i = 0; i < params.n; ++i) {
    LatticeBasis b(params.n, params.n);
    for (int r = 0; r < params.n; ++r)
      for (int c = 0; c < params.n; ++c)
        b(r, c) = r == c ? LaurentScalar::monomial(field.one(), r >= params.n - i ? 1 : 0,
                                                   params.precision)
                         : LaurentScalar::zero(params.q0, params.precision);
    vs.push_back(canonical_vertex(b));
  }
  return make_chamber(std::move(vs));
}

Panel panel_of(const Chamber& c, int type) {
  if (type < 0 || type >= c.rank()) throw DomainError("panel type out of range");
  Panel p;
  p.type = type;
  for (const auto& v : c.vertices)
    if (v.type != type) p.vertices.push_back(v);
  return p;
}

std::vector<Chamber> panel_neighbors(const Chamber& c, int s) {
  const int n = c.rank();
  if (s < 0 || s >= n) throw DomainError("panel type out of range");
  const LatticeBasis& any = c.vertices[0].basis;
  const int q0 = any(0, 0).q0();
  const ResidueField& field = ResidueField::get(q0);

  // A > L_s > B with A / B two-dimensional over the residue field.
  const LatticeBasis a = s == 0 ? shifted(c.vertices[n - 1].basis, -1) : c.vertices[s - 1].basis;
  const LatticeBasis b = s == n - 1 ? shifted(c.vertices[0].basis, 1) : c.vertices[s + 1].basis;
  const LatticeBasis m = solve_upper_triangular(a, b);

  Echelon ech(n);
  for (int j = 0; j < n; ++j) {
    std::vector<FieldElem> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[i] = reduce_mod_t(m(i, j), field);
    ech.add(std::move(col));
  }
  if (ech.rank() != static_cast<std::size_t>(n - 2))
    throw InvariantViolation("chain quotient at a panel is not two-dimensional");
  std::vector<int> complement;
  for (int k = 0; k < n && complement.size() < 2; ++k) {
    std::vector<FieldElem> e(static_cast<std::size_t>(n), field.zero());
    e[k] = field.one();
    if (ech.add(std::move(e))) complement.push_back(k);
  }
  const int ei = complement[0];
  const int ej = complement[1];

  std::vector<LatticeBasis> lines;
  for (const FieldElem& x : field.elements()) {
    LatticeBasis v = a.col(ei);
    if (!x.is_zero()) {
      const LaurentScalar cx = LaurentScalar::monomial(x, 0, any(0, 0).precision());
      for (int i = 0; i < n; ++i)
        if (!a(i, ej).is_zero()) v(i, 0) += cx * a(i, ej);
    }
    lines.push_back(v);
  }
  lines.push_back(a.col(ej));

  std::vector<Chamber> out;
  out.reserve(lines.size());
  for (const auto& v : lines) {
    LatticeBasis gens(n, n + 1);
    gens.leftCols(n) = b;
    gens.col(n) = v;
    std::vector<Vertex> vs = c.vertices;
    vs[s] = canonical_vertex(gens);
    if (vs[s].type != s) throw InvariantViolation("panel neighbor has the wrong vertex type");
    out.push_back(Chamber{std::move(vs)});
  }
  std::sort(out.begin(), out.end(),
            [](const Chamber& x, const Chamber& y) { return x.key() < y.key(); });
  return out;
}

Chamber theta(const Chamber& c) {
  std::vector<Vertex> vs;
  vs.reserve(c.vertices.size());
  for (const auto& v : c.vertices) vs.push_back(canonical_vertex(frobenius(v.basis)));
  return make_chamber(std::move(vs));
}

bool is_rational(const Chamber& c) {
  return std::all_of(c.vertices.begin(), c.vertices.end(), vertex_is_rational);
}

Chamber ChamberGraph::chamber(int c) const {
  Chamber ch;
  for (int v : chamber_vertices_[c]) ch.vertices.push_back(vertex_table_[v]);
  return ch;
}

int ChamberGraph::find(const std::string& key) const {
  auto it = chamber_index_.find(key);
  return it == chamber_index_.end() ? -1 : it->second;
}

bool ChamberGraph::panel_complete(int c, int s) const {
  return static_cast<int>(adjacency_[c][s].size()) == params.q();
}

std::vector<int> ChamberGraph::panel_chambers(int c, int s) const {
  if (!panel_complete(c, s)) throw RegionError("panel is not completely explored");
  std::vector<int> out = adjacency_[c][s];
  out.push_back(c);
  std::sort(out.begin(), out.end(), [this](int x, int y) { return keys_[x] < keys_[y]; });
  return out;
}

bool ChamberGraph::xf_exact(int c) const {
  return dist_xf_[c] >= 0 && dist_base_[c] + dist_xf_[c] <= complete_radius;
}

std::optional<PanelStats> ChamberGraph::panel_stats(int c, int s) const {
  if (!panel_complete(c, s)) return std::nullopt;
  const std::vector<int> members = panel_chambers(c, s);
  const int rational_count = static_cast<int>(
      std::count_if(members.begin(), members.end(), [this](int x) { return rational_[x]; }));
  PanelStats st;
  st.gen = s;
  if (rational_count > 0) {
    // Everything else in the panel is adjacent to X_F, hence at distance 1.
    st.d = 0;
    st.minus = rational_count;
    st.plus = static_cast<int>(members.size()) - rational_count;
    return st;
  }
  int lo = INT_MAX;
  for (int x : members) {
    if (!xf_exact(x)) return std::nullopt;
    lo = std::min(lo, dist_xf_[x]);
  }
  st.d = lo;
  for (int x : members) {
    if (dist_xf_[x] == lo) {
      ++st.minus;
    } else if (dist_xf_[x] == lo + 1) {
      ++st.plus;
    } else {
      throw InvariantViolation("panel meets more than two distance classes");
    }
  }
  return st;
}

std::vector<int> ChamberGraph::sorted_by_key() const {
  std::vector<int> idx(size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [this](int x, int y) { return keys_[x] < keys_[y]; });
  return idx;
}

int ChamberGraph::intern_vertex(const Vertex& v) {
  auto [it, inserted] = vertex_index_.try_emplace(v.key, static_cast<int>(vertex_table_.size()));
  if (inserted) {
    vertex_table_.push_back(v);
    vertex_rational_.push_back(vertex_is_rational(v));
  }
  return it->second;
}

int ChamberGraph::intern_chamber(const Chamber& c, int dist) {
  std::string k = c.key();
  auto it = chamber_index_.find(k);
  if (it != chamber_index_.end()) return it->second;
  const int id = static_cast<int>(keys_.size());
  std::vector<int> vids;
  bool rat = true;
  for (const auto& v : c.vertices) {
    vids.push_back(intern_vertex(v));
    rat = rat && vertex_rational_[vids.back()];
  }
  chamber_vertices_.push_back(std::move(vids));
  chamber_index_.emplace(k, id);
  keys_.push_back(std::move(k));
  adjacency_.emplace_back(static_cast<std::size_t>(params.n));
  dist_base_.push_back(dist);
  rational_.push_back(rat);
  return id;
}

ChamberGraph explore(const BuildingParams& params, int radius, std::size_t cap_chambers) {
  if (radius < 0) throw DomainError("radius must be non-negative");
  ChamberGraph g;
  g.params = params;
  g.radius = radius;
  g.complete_radius = radius;
  const int n = params.n;

  std::deque<int> queue{g.intern_chamber(standard_chamber(params), 0)};
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    const int d = g.dist_base_[c];
    if (d >= radius) continue;
    if (g.size() >= cap_chambers) {
      g.truncated = true;
      g.complete_radius = std::min(g.complete_radius, d);
      break;
    }
    const Chamber ch = g.chamber(c);
    for (int s = 0; s < n; ++s) {
      if (!g.adjacency_[c][s].empty()) continue;
      std::vector<int> ids;
      for (const Chamber& nb : panel_neighbors(ch, s)) {
        const std::size_t before = g.size();
        const int id = g.intern_chamber(nb, d + 1);
        if (g.size() > before) queue.push_back(id);
        ids.push_back(id);
      }
      for (int id : ids) {
        auto& adj = g.adjacency_[id][s];
        if (!adj.empty()) throw InvariantViolation("panel explored twice from different sides");
        for (int other : ids)
          if (other != id) adj.push_back(other);
      }
    }
  }

  // Multi-source BFS from the rational chambers.
  g.dist_xf_.assign(g.size(), -1);
  std::deque<int> frontier;
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (g.rational_[c]) {
      g.dist_xf_[c] = 0;
      frontier.push_back(static_cast<int>(c));
    }
  }
  while (!frontier.empty()) {
    const int c = frontier.front();
    frontier.pop_front();
    for (int s = 0; s < n; ++s)
      for (int x : g.adjacency_[c][s])
        if (g.dist_xf_[x] < 0) {
          g.dist_xf_[x] = g.dist_xf_[c] + 1;
          frontier.push_back(x);
        }
  }

  std::vector<int> vertex_theta(g.vertex_table_.size());
  for (std::size_t v = 0; v < g.vertex_table_.size(); ++v) {
    if (g.vertex_rational_[v]) {
      vertex_theta[v] = static_cast<int>(v);
      continue;
    }
    const Vertex tv = canonical_vertex(frobenius(g.vertex_table_[v].basis));
    auto it = g.vertex_index_.find(tv.key);
    vertex_theta[v] = it == g.vertex_index_.end() ? -1 : it->second;
  }
  g.theta_.assign(g.size(), -1);
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (g.rational_[c]) {
      g.theta_[c] = static_cast<int>(c);
      continue;
    }
    std::string k;
    bool ok = true;
    for (int v : g.chamber_vertices_[c]) {
      if (vertex_theta[v] < 0) {
        ok = false;
        break;
      }
      k += g.vertex_table_[vertex_theta[v]].key;
    }
    if (ok) g.theta_[c] = g.find(k);
  }
  return g;
}

std::vector<std::optional<AffinePerm>> weyl_distances_from(const ChamberGraph& graph, int a) {
  const int n = graph.params.n;
  std::vector<std::optional<AffinePerm>> w(graph.size());
  std::vector<int> dist(graph.size(), -1);
  w[a] = AffinePerm::identity(n);
  dist[a] = 0;
  std::deque<int> queue{a};
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      for (int x : graph.adjacent(c, s)) {
        const AffinePerm next = w[c]->apply_gen(s, Side::right);
        if (dist[x] < 0) {
          dist[x] = dist[c] + 1;
          w[x] = next;
          queue.push_back(x);
        } else if (dist[x] == dist[c] + 1 && !(*w[x] == next)) {
          throw InvariantViolation("minimal galleries spell different Weyl distances");
        }
      }
    }
  }
  for (std::size_t c = 0; c < graph.size(); ++c)
    if (w[c] && w[c]->length() != dist[c])
      throw InvariantViolation("Weyl distance length differs from gallery distance");
  return w;
}

AffinePerm weyl_distance(const ChamberGraph& graph, int a, int b) {
  auto all = weyl_distances_from(graph, a);
  if (!all[b]) throw RegionError("no gallery between the chambers inside the explored ball");
  return *all[b];
}

}  // namespace gammalab
