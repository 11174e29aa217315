#ifndef GAMMALAB_AFFINE_WEYL_HPP
#define GAMMALAB_AFFINE_WEYL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gammalab {

/// Order of s_i s_j; `kInfiniteOrder` marks the free product case n = 2.
inline constexpr int kInfiniteOrder = 0;

/// The Coxeter system (W, S) of type A~_{n-1}, generators s_0, ..., s_{n-1}.
struct CoxeterSystem {
  int n = 0;
  Eigen::MatrixXi coxeter_matrix;

  int rank() const { return n; }
  int order(int i, int j) const { return coxeter_matrix(i, j); }
};

CoxeterSystem make_affine_weyl(int n);

enum class Side { left, right };

/// Affine permutation w : Z -> Z with w(i + n) = w(i) + n, stored by its
/// window [w(1), ..., w(n)] and normalized so that sum(w(i) - i) = 0.
///
/// The generator s_i (1 <= i < n) swaps i and i+1 (mod n); s_0 swaps 0 and 1.
/// Ordering is lexicographic on windows, which fixes the canonical order of
/// Hecke algebra terms.
class AffinePerm {
 public:
  AffinePerm() = default;
  static AffinePerm identity(int n);
  /// Validates distinctness mod n and the sum normalization.
  static AffinePerm from_window(std::vector<int> window);
  /// s_{w[0]} s_{w[1]} ... s_{w[k-1]}.
  static AffinePerm from_word(int n, std::span<const int> word);
  static AffinePerm generator(int n, int i) { return identity(n).apply_gen(i, Side::left); }

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  bool is_identity() const;

  /// w(i) for any integer i.
  int operator()(int i) const;

  AffinePerm apply_gen(int i, Side side) const;
  AffinePerm inverse() const;
  friend AffinePerm operator*(const AffinePerm& a, const AffinePerm& b);

  /// Number of affine inversions.
  int length() const;
  bool has_left_descent(int i) const;
  bool has_right_descent(int i) const;
  /// Reduced word, repeatedly stripping the smallest left descent.
  std::vector<int> reduced_word() const;

  friend bool operator==(const AffinePerm&, const AffinePerm&) = default;
  friend auto operator<=>(const AffinePerm&, const AffinePerm&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const AffinePerm& w);

 private:
  explicit AffinePerm(std::vector<int> window) : window_(std::move(window)) {}
  std::vector<int> window_;
};

/// Free-function spellings mirroring the algebraic operations.
inline AffinePerm apply_gen(const AffinePerm& w, int i, Side side) { return w.apply_gen(i, side); }
inline int length(const AffinePerm& w) { return w.length(); }
inline std::vector<int> reduced_word(const AffinePerm& w) { return w.reduced_word(); }

/// All elements of length <= max_length, sorted by (length, window).
std::vector<AffinePerm> elements_up_to_length(int n, int max_length);

}  // namespace gammalab

template <>
struct std::hash<gammalab::AffinePerm> {
  std::size_t operator()(const gammalab::AffinePerm& w) const noexcept;
};

#endif  // GAMMALAB_AFFINE_WEYL_HPP
