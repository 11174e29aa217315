#ifndef GAMMALAB_HECKE_HPP
#define GAMMALAB_HECKE_HPP

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammalab/affine_weyl.hpp"
#include "gammalab/rational.hpp"

namespace gammalab {

/// The Iwahori-Hecke algebra of SL(n, E) specialized at q = q0^2.
struct HeckeAlgebra {
  int n = 0;
  int q0 = 0;

  int q() const { return q0 * q0; }
  friend bool operator==(const HeckeAlgebra&, const HeckeAlgebra&) = default;
};

/// Element sum_w c_w e_w of the Iwahori-Hecke algebra with exact rational coefficients.
///
/// Terms are kept in window-lexicographic order and never store a zero
/// coefficient, so structural equality is algebraic equality.
class HeckeElem {
 public:
  using Terms = std::map<AffinePerm, Rat>;

  HeckeElem() = default;
  explicit HeckeElem(HeckeAlgebra algebra) : algebra_(algebra) {}

  static HeckeElem zero(HeckeAlgebra algebra) { return HeckeElem(algebra); }
  static HeckeElem one(HeckeAlgebra algebra);
  static HeckeElem basis(HeckeAlgebra algebra, const AffinePerm& w, const Rat& coeff = Rat(1));
  /// e_{s_i}
  static HeckeElem generator(HeckeAlgebra algebra, int i);

  const HeckeAlgebra& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  Rat coefficient(const AffinePerm& w) const;
  /// Largest length in the support (-1 for zero).
  int max_length() const;

  void add_term(const AffinePerm& w, const Rat& coeff);

  HeckeElem operator-() const;
  friend HeckeElem operator+(const HeckeElem& a, const HeckeElem& b);
  friend HeckeElem operator-(const HeckeElem& a, const HeckeElem& b);
  friend HeckeElem operator*(const Rat& c, const HeckeElem& h);
  /// Convolution product.
  friend HeckeElem operator*(const HeckeElem& a, const HeckeElem& b);

  friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

  /// [{window: [...], coeff: "p/q"}, ...] in window order.
  nlohmann::json to_json() const;
  static HeckeElem from_json(HeckeAlgebra algebra, const nlohmann::json& j);
  /// Compact canonical text; equal elements give equal keys.
  std::string canonical_key() const;
  friend std::ostream& operator<<(std::ostream& os, const HeckeElem& h);

 private:
  HeckeAlgebra algebra_;
  Terms terms_;
};

/// e_{s_i} * h, via the Iwahori-Matsumoto rule.
HeckeElem left_mul_generator(int i, const HeckeElem& h);
HeckeElem hecke_mul(const HeckeElem& a, const HeckeElem& b);
/// e_w -> e_{w^{-1}}.
HeckeElem anti_involution(const HeckeElem& h);

/// Distance statistics of the chambers through one panel.
struct PanelStats {
  int minus = 0;  ///< chambers at the panel distance d
  int plus = 0;   ///< chambers at d + 1
  int d = 0;
  int gen = 0;    ///< type of the panel

  friend bool operator==(const PanelStats&, const PanelStats&) = default;
  friend auto operator<=>(const PanelStats&, const PanelStats&) = default;
};

/// minus + plus = q + 1 and (minus, plus) is (q0+1, q0^2-q0) or (1, q0^2).
bool satisfies_courtes_law(const PanelStats& stats, int q0);

/// (1/plus)(e_s - (minus - 1) e_1). Throws InvariantViolation on inadmissible stats.
HeckeElem panel_element(const PanelStats& stats, HeckeAlgebra algebra);

/// e_{D_{d-1}} * ... * e_{D_0} for panels listed as D_0, ..., D_{d-1}; e_1 when empty.
HeckeElem gallery_element(std::span<const PanelStats> panels, HeckeAlgebra algebra);

/// Inverse of factors[0] * factors[1] * ... * factors[k-1], computed factorwise in
/// reverse order. Each factor must be (1/a)(e_s - (b-1) e_1) with a + b = q + 1 and
/// a b != 0; anything else throws DomainError.
HeckeElem hecke_inverse_of_panel_product(std::span<const HeckeElem> factors, HeckeAlgebra algebra);

/// Inverse of a single admissible factor (1/a)(e_s - (b-1)e_1): (1/b)(e_s - (a-1)e_1).
HeckeElem invert_panel_factor(const HeckeElem& factor);

}  // namespace gammalab

#endif  // GAMMALAB_HECKE_HPP
