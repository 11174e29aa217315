#include "gammalab/hecke.hpp"

#include <algorithm>
#include <ostream>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

void check_same_algebra(const HeckeElem& a, const HeckeElem& b) {
  if (!(a.algebra() == b.algebra()))
    throw DomainError("Hecke elements from different algebras (n or q0 mismatch)");
}

}  // namespace

HeckeElem HeckeElem::one(HeckeAlgebra algebra) {
  return basis(algebra, AffinePerm::identity(algebra.n));
}

HeckeElem HeckeElem::basis(HeckeAlgebra algebra, const AffinePerm& w, const Rat& coeff) {
  if (w.rank() != algebra.n) throw DomainError("basis element of the wrong rank");
  HeckeElem h(algebra);
  h.add_term(w, coeff);
  return h;
}

HeckeElem HeckeElem::generator(HeckeAlgebra algebra, int i) {
  return basis(algebra, AffinePerm::generator(algebra.n, i));
}

bool HeckeElem::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_identity() && terms_.begin()->second.is_one();
}

Rat HeckeElem::coefficient(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

int HeckeElem::max_length() const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, w.length());
  return m;
}

void HeckeElem::add_term(const AffinePerm& w, const Rat& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElem HeckeElem::operator-() const {
  HeckeElem r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

HeckeElem operator+(const HeckeElem& a, const HeckeElem& b) {
  check_same_algebra(a, b);
  HeckeElem r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

HeckeElem operator-(const HeckeElem& a, const HeckeElem& b) { return a + (-b); }

HeckeElem operator*(const Rat& c, const HeckeElem& h) {
  HeckeElem r(h.algebra_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : h.terms_) r.terms_.emplace(w, c * x);
  return r;
}

HeckeElem operator*(const HeckeElem& a, const HeckeElem& b) { return hecke_mul(a, b); }

HeckeElem left_mul_generator(int i, const HeckeElem& h) {
  const Rat q(h.algebra().q());
  HeckeElem r(h.algebra());
  for (const auto& [v, c] : h.terms()) {
    const AffinePerm sv = v.apply_gen(i, Side::left);
    if (sv.length() > v.length()) {
      r.add_term(sv, c);
    } else {
      r.add_term(sv, q * c);
      r.add_term(v, (q - Rat(1)) * c);
    }
  }
  return r;
}

HeckeElem hecke_mul(const HeckeElem& a, const HeckeElem& b) {
  check_same_algebra(a, b);
  HeckeElem result(a.algebra());
  for (const auto& [w, c] : a.terms()) {
    const std::vector<int> word = w.reduced_word();
    HeckeElem x = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_mul_generator(*it, x);
    for (const auto& [v, d] : x.terms()) result.add_term(v, c * d);
  }
  return result;
}

HeckeElem anti_involution(const HeckeElem& h) {
  HeckeElem r(h.algebra());
  for (const auto& [w, c] : h.terms()) r.add_term(w.inverse(), c);
  return r;
}

nlohmann::json HeckeElem::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : terms_) arr.push_back({{"window", w.window()}, {"coeff", c.to_string()}});
  return arr;
}

HeckeElem HeckeElem::from_json(HeckeAlgebra algebra, const nlohmann::json& j) {
  HeckeElem h(algebra);
  for (const auto& term : j) {
    AffinePerm w = AffinePerm::from_window(term.at("window").get<std::vector<int>>());
    if (w.rank() != algebra.n) throw ValidationError("Hecke term of the wrong rank");
    h.add_term(w, Rat::parse(term.at("coeff").get<std::string>()));
  }
  return h;
}

std::string HeckeElem::canonical_key() const {
  std::string key;
  for (const auto& [w, c] : terms_) {
    key += w.to_string();
    key += ':';
    key += c.to_string();
    key += ';';
  }
  return key;
}

std::ostream& operator<<(std::ostream& os, const HeckeElem& h) {
  if (h.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [w, c] : h.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")e" << w;
  }
  return os;
}

bool satisfies_courtes_law(const PanelStats& stats, int q0) {
  const int q = q0 * q0;
  if (stats.minus + stats.plus != q + 1) return false;
  return (stats.minus == q0 + 1 && stats.plus == q - q0) || (stats.minus == 1 && stats.plus == q);
}

HeckeElem panel_element(const PanelStats& stats, HeckeAlgebra algebra) {
  if (!satisfies_courtes_law(stats, algebra.q0))
    throw InvariantViolation("panel statistics (" + std::to_string(stats.minus) + ", " +
                             std::to_string(stats.plus) + ") violate the two admissible shapes");
  if (stats.gen < 0 || stats.gen >= algebra.n) throw DomainError("panel type out of range");
  const Rat scale(1, stats.plus);
  HeckeElem h = HeckeElem::generator(algebra, stats.gen);
  h.add_term(AffinePerm::identity(algebra.n), Rat(-(stats.minus - 1)));
  return scale * h;
}

HeckeElem gallery_element(std::span<const PanelStats> panels, HeckeAlgebra algebra) {
  HeckeElem result = HeckeElem::one(algebra);
  for (const auto& stats : panels) result = hecke_mul(panel_element(stats, algebra), result);
  return result;
}

HeckeElem invert_panel_factor(const HeckeElem& factor) {
  const HeckeAlgebra alg = factor.algebra();
  const AffinePerm id = AffinePerm::identity(alg.n);
  int gen = -1;
  Rat cs, c1;
  for (const auto& [w, c] : factor.terms()) {
    if (w.is_identity()) {
      c1 = c;
    } else if (w.length() == 1 && gen < 0) {
      gen = w.reduced_word().front();
      cs = c;
    } else {
      throw DomainError("factor is not of the form (1/a)(e_s - (b-1)e_1)");
    }
  }
  if (gen < 0) throw DomainError("factor has no simple-reflection term");
  const Rat a = cs.inverse();
  const Rat b = Rat(1) - c1 * a;
  if (a + b != Rat(alg.q() + 1) || b.is_zero())
    throw DomainError("factor parameters violate a + b = q + 1 with a, b nonzero");
  HeckeElem inv = HeckeElem::generator(alg, gen);
  inv.add_term(id, -(a - Rat(1)));
  return b.inverse() * inv;
}

HeckeElem hecke_inverse_of_panel_product(std::span<const HeckeElem> factors, HeckeAlgebra algebra) {
  // (f_0 f_1 ... f_{k-1})^{-1} = f_{k-1}^{-1} ... f_0^{-1}
  HeckeElem result = HeckeElem::one(algebra);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!(it->algebra() == algebra)) throw DomainError("factor from a different Hecke algebra");
    result = hecke_mul(result, invert_panel_factor(*it));
  }
  return result;
}

}  // namespace gammalab
