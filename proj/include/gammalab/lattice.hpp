#ifndef GAMMALAB_LATTICE_HPP
#define GAMMALAB_LATTICE_HPP

#include <string>

#include "gammalab/laurent.hpp"
#include "gammalab/rational.hpp"

namespace gammalab {

/// Columns span an O-lattice in E^n, O = GF(q0^2)[[t]].
using LatticeBasis = MatrixX<LaurentScalar>;

/// Column Hermite normal form of a full-rank n x m generator matrix (m >= n).
///
/// The result is n x n upper triangular with t^{a_i} on the diagonal, and each
/// entry to the right of a pivot only has terms of valuation < a_i. Two
/// generator sets span the same lattice iff their normal forms are equal.
/// Throws DomainError on rank deficiency and PrecisionExhausted when the
/// window is too short to decide a reduction.
LatticeBasis hermite_normal_form(const LatticeBasis& generators);

/// Sum of the pivot valuations of a normal form.
int det_valuation(const LatticeBasis& hnf);

/// A vertex of the building: the homothety class of a lattice, stored as the
/// normal form of its representative with det-valuation in {0, ..., n-1}.
struct Vertex {
  LatticeBasis basis;
  int type = 0;
  /// Precision-independent binary key of `basis`.
  std::string key;

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.key == b.key; }
};

Vertex canonical_vertex(const LatticeBasis& generators);

/// Entrywise Frobenius.
LatticeBasis frobenius(const LatticeBasis& m);

/// t^k * m.
LatticeBasis shifted(const LatticeBasis& m, int k);

/// X with A X = B for A a normal form (upper triangular, monomial diagonal).
LatticeBasis solve_upper_triangular(const LatticeBasis& a, const LatticeBasis& b);

/// Human-readable rendering, one row per line.
std::string to_string(const LatticeBasis& m);

}  // namespace gammalab

#endif  // GAMMALAB_LATTICE_HPP
