#ifndef GAMMALAB_MODULE_LAB_HPP
#define GAMMALAB_MODULE_LAB_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammalab/gamma.hpp"
#include "gammalab/rational.hpp"

namespace gammalab {

/// Finite-dimensional representation of the Hecke algebra: one matrix per simple generator.
struct HModule {
  int n = 0;
  int q0 = 0;
  int dim = 0;
  std::vector<RatMatrix> generators;

  HeckeAlgebra algebra() const { return {n, q0}; }
};

struct RelationFailure {
  std::string relation;  ///< "quadratic" or "braid"
  int i = 0;
  int j = 0;
  RatMatrix residual;
};

/// First failing quadratic or braid relation, if any.
std::optional<RelationFailure> check_relations(const HModule& mod);

/// Parses {n, q0, dim, generators: {s0: [[...]], ...}} and validates it.
/// Throws ValidationError naming the failing generator pair.
HModule load_module(const nlohmann::json& j);
HModule load_module_file(const std::string& path);
nlohmann::json to_json(const HModule& mod);

/// "trivial" (A_i = q) or "sign" (A_i = -1).
HModule builtin_module(const std::string& name, int n, int q0);

/// r(h), with e_w sent to the product of generator matrices along reduced_word(w).
RatMatrix evaluate(const HModule& mod, const HeckeElem& h);

/// The contragredient action: r(h^v)^T with e_w -> e_{w^{-1}}.
RatMatrix contragredient(const HModule& mod, const HeckeElem& h);

struct FixedSpace {
  int dim = 0;
  /// Columns are a basis of the common fixed space.
  RatMatrix basis;
};

/// Vectors of the dual module fixed by the contragredient action of every listed generator.
FixedSpace gamma_fixed_dim(const HModule& mod, const std::vector<HeckeElem>& generators);
FixedSpace gamma_fixed_dim(const HModule& mod, const GammaGenerators& gens);

/// Values indexed by graph chamber; nullopt outside the gallery-certified region.
struct DistributionFunction {
  std::vector<std::optional<RatVector>> values;

  bool defined(int c) const { return values[c].has_value(); }
};

/// f(C) = r~(e_G) m for the admissible galleries G ending at C. Throws
/// DomainError if two galleries disagree, i.e. m is not fixed.
DistributionFunction reconstruct_f(const HModule& mod, const RatVector& m, const GalleryDAG& dag);

struct LocalViolation {
  int chamber = 0;
  int type = 0;
  std::string relation;  ///< "panel-sum", "near-constant", "far-constant", "near-to-far", "far-to-near"
  RatVector lhs;
  RatVector rhs;
};

struct LocalRelationReport {
  int panel_sum_checked = 0;
  int panels_checked = 0;
  int far_to_near_checked = 0;
  std::vector<LocalViolation> violations;
};

/// Checks r~(e_s) f(C) = sum over the other chambers C' of the type-s panel of
/// f(C') wherever f is known on the whole panel. On every panel with certified
/// statistics it also checks that f is constant on each side and that
/// f+ = (1/plus)(r~(e_s) - (minus-1)) f- and f- = (1/minus)(r~(e_s) - (plus-1)) f+.
/// f+ is the value on the far side (distance d+1) and f- on the near side.
LocalRelationReport check_local_relation(const HModule& mod, const DistributionFunction& f,
                                         const ChamberGraph& graph);

}  // namespace gammalab

#endif  // GAMMALAB_MODULE_LAB_HPP
