#include "gammalab/lattice.hpp"

#include <climits>
#include <sstream>
#include <vector>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LatticeBasis hermite_normal_form(const LatticeBasis& generators) {
  const Eigen::Index n = generators.rows();
  const Eigen::Index m = generators.cols();
  if (m < n) throw DomainError("lattice generators must have at least n columns");
  LatticeBasis g = generators;
  LatticeBasis out(n, n);
  std::vector<bool> active(static_cast<std::size_t>(m), true);

  for (Eigen::Index r = n - 1; r >= 0; --r) {
    Eigen::Index pivot = -1;
    int best = INT_MAX;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (!active[j] || g(r, j).is_zero()) continue;
      if (g(r, j).valuation() < best) {
        best = g(r, j).valuation();
        pivot = j;
      }
    }
    if (pivot < 0) throw DomainError("lattice generators are not of full rank");

    const LaurentScalar pivot_inv = g(r, pivot).inverse();
    for (Eigen::Index j = 0; j < m; ++j) {
      if (!active[j] || j == pivot || g(r, j).is_zero()) continue;
      const LaurentScalar ratio = g(r, j) * pivot_inv;
      for (Eigen::Index i = 0; i < r; ++i) {
        if (!g(i, pivot).is_zero()) g(i, j) -= ratio * g(i, pivot);
      }
      g(r, j) = LaurentScalar::zero(g(r, j).q0(), g(r, j).precision());
    }

    // Scale the pivot column by a unit so that the pivot becomes exactly t^best.
    const LaurentScalar& p = g(r, pivot);
    const LaurentScalar unit_inv = p.shifted(-best).inverse();
    for (Eigen::Index i = 0; i < r; ++i) {
      if (!g(i, pivot).is_zero()) g(i, pivot) *= unit_inv;
    }
    g(r, pivot) = LaurentScalar::monomial(ResidueField::get(p.q0()).one(), best, p.precision());
    for (Eigen::Index i = 0; i < n; ++i) out(i, r) = g(i, pivot);
    active[pivot] = false;
  }

  // Reduce entries right of each pivot modulo t^{a_r}; rows below r are untouched.
  for (Eigen::Index r = n - 2; r >= 0; --r) {
    const int a = out(r, r).valuation();
    for (Eigen::Index j = r + 1; j < n; ++j) {
      const LaurentScalar& x = out(r, j);
      if (x.is_zero() || x.valuation() >= a) {
        if (!x.is_zero()) {
          const LaurentScalar factor = x.shifted(-a);
          for (Eigen::Index i = 0; i < r; ++i)
            if (!out(i, r).is_zero()) out(i, j) -= factor * out(i, r);
          out(r, j) = LaurentScalar::zero(x.q0(), x.precision());
        }
        continue;
      }
      const LaurentScalar low = x.truncated(a);
      const LaurentScalar high = x - low;
      if (high.is_zero()) continue;
      const LaurentScalar factor = high.shifted(-a);
      for (Eigen::Index i = 0; i < r; ++i)
        if (!out(i, r).is_zero()) out(i, j) -= factor * out(i, r);
      out(r, j) = low;
    }
  }
  return out;
}

int det_valuation(const LatticeBasis& hnf) {
  int v = 0;
  for (Eigen::Index i = 0; i < hnf.rows(); ++i) v += hnf(i, i).valuation();
  return v;
}

Vertex canonical_vertex(const LatticeBasis& generators) {
  Vertex vx;
  vx.basis = hermite_normal_form(generators);
  const int n = static_cast<int>(vx.basis.rows());
  const int v = det_valuation(vx.basis);
  const int k = floor_div(v, n);
  if (k != 0) vx.basis = shifted(vx.basis, -k);
  vx.type = v - k * n;
  vx.key.reserve(static_cast<std::size_t>(n * (n + 1) * 4));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) vx.basis(i, j).append_key(vx.key);
  return vx;
}

LatticeBasis frobenius(const LatticeBasis& m) {
  return m.unaryExpr([](const LaurentScalar& x) { return x.frobenius(); });
}

LatticeBasis shifted(const LatticeBasis& m, int k) {
  return m.unaryExpr([k](const LaurentScalar& x) { return x.shifted(k); });
}

LatticeBasis solve_upper_triangular(const LatticeBasis& a, const LatticeBasis& b) {
  const Eigen::Index n = a.rows();
  LatticeBasis x(n, b.cols());
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      LaurentScalar acc = b(i, c);
      for (Eigen::Index k = i + 1; k < n; ++k)
        if (!a(i, k).is_zero() && !x(k, c).is_zero()) acc -= a(i, k) * x(k, c);
      x(i, c) = acc.shifted(-a(i, i).valuation());
    }
  }
  return x;
}

std::string to_string(const LatticeBasis& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " | " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace gammalab
