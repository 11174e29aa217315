#ifndef GAMMALAB_EXACT_KERNEL_HPP
#define GAMMALAB_EXACT_KERNEL_HPP

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gammalab/errors.hpp"
#include "gammalab/rational.hpp"

namespace gammalab {

/// Fraction-free (Bareiss) row echelon form over an integral domain with
/// exact division. Returns the pivot columns; `m` is overwritten by the echelon form.
template <typename Scalar>
std::vector<Eigen::Index> bareiss_echelon(MatrixX<Scalar>& m) {
  const Scalar zero{};
  Scalar prev(1);
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == zero) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      for (Eigen::Index j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = zero;
    }
    prev = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Scales each row by the lcm of its denominators, giving an integer matrix
/// with the same row space.
inline RatMatrix clear_denominators(const RatMatrix& m) {
  RatMatrix out = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      mpz_class d = m(i, j).value().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    const Rat scale{mpq_class(l)};
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * scale;
  }
  return out;
}

struct KernelResult {
  /// Columns form a basis of {x : M x = 0}; each has a 1 in its free coordinate.
  RatMatrix basis;
  Eigen::Index rank = 0;
};

/// Exact null space of a rational matrix.
inline KernelResult exact_kernel(const RatMatrix& m) {
  RatMatrix e = clear_denominators(m);
  const std::vector<Eigen::Index> pivots = bareiss_echelon(e);
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      if (!e(i, j).is_integer()) throw InvariantViolation("fraction-free elimination divided inexactly");

  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivots) is_pivot[c] = true;

  KernelResult out;
  out.rank = static_cast<Eigen::Index>(pivots.size());
  out.basis = RatMatrix(cols, cols - out.rank);
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x = RatVector::Constant(cols, Rat(0));
    x(f) = Rat(1);
    for (Eigen::Index r = out.rank - 1; r >= 0; --r) {
      const Eigen::Index pc = pivots[r];
      Rat sum(0);
      for (Eigen::Index j = pc + 1; j < cols; ++j)
        if (!x(j).is_zero() && !e(r, j).is_zero()) sum += e(r, j) * x(j);
      x(pc) = -sum / e(r, pc);
    }
    out.basis.col(k++) = x;
  }
  return out;
}

}  // namespace gammalab

#endif  // GAMMALAB_EXACT_KERNEL_HPP
