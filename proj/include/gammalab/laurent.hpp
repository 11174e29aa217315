#ifndef GAMMALAB_LAURENT_HPP
#define GAMMALAB_LAURENT_HPP

#include <climits>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gammalab/residue_field.hpp"

namespace gammalab {

/// Truncated Laurent series over GF(q0^2): an element of E = GF(q0^2)((t)).
///
/// A nonzero value is sum_{k<P} c_k t^{v+k} with c_0 != 0; P is the relative
/// precision window. Arithmetic follows the capped-relative model: results
/// keep the smaller operand window and are renormalized (leading zeros
/// stripped, window padded) after every operation, so two scalars compare
/// equal exactly when their significant coefficients agree.
///
/// Zero is exact and carries no valuation. A default-constructed scalar is an
/// untagged zero, usable by Eigen as the additive identity of any field.
class LaurentScalar {
 public:
  LaurentScalar() = default;

  static LaurentScalar zero(int q0, int precision);
  static LaurentScalar one(int q0, int precision);
  /// The uniformizer t.
  static LaurentScalar uniformizer(int q0, int precision);
  static LaurentScalar monomial(FieldElem c, int valuation, int precision);
  /// Normalizes: leading zeros are stripped and the window padded to `precision`.
  static LaurentScalar from_coefficients(int q0, int valuation, std::vector<FieldElem> coeffs,
                                         int precision);

  int q0() const { return q0_; }
  int precision() const { return precision_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Valuation of the leading term; INT_MAX for zero.
  int valuation() const { return is_zero() ? INT_MAX : valuation_; }
  /// Exponent below which every coefficient is known; INT_MAX for zero.
  int absolute_precision() const { return is_zero() ? INT_MAX : valuation_ + precision_; }
  const std::vector<FieldElem>& coefficients() const { return coeffs_; }
  /// Index one past the last nonzero coefficient in the window.
  int significant_length() const;
  FieldElem leading_coefficient() const;
  /// Coefficient of t^k. Throws PrecisionExhausted beyond the window.
  FieldElem coefficient(int k) const;

  /// Throws PrecisionExhausted for zero (the only non-unit in this model).
  LaurentScalar inverse() const;
  LaurentScalar frobenius() const;
  /// Multiplication by t^k.
  LaurentScalar shifted(int k) const;
  /// Terms of valuation < bound. Throws PrecisionExhausted if the window ends before bound.
  LaurentScalar truncated(int bound) const;
  LaurentScalar with_precision(int precision) const;
  /// True iff every coefficient lies in GF(q0).
  bool is_frobenius_fixed() const;

  LaurentScalar operator-() const;
  friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b);
  LaurentScalar& operator+=(const LaurentScalar& b) { return *this = *this + b; }
  LaurentScalar& operator-=(const LaurentScalar& b) { return *this = *this - b; }
  LaurentScalar& operator*=(const LaurentScalar& b) { return *this = *this * b; }

  /// Equality of significant coefficients; the window length is ignored.
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);

  /// Appends a precision-independent binary encoding (used in canonical keys).
  void append_key(std::string& out) const;
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentScalar& a);

 private:
  static LaurentScalar normalized(int q0, int valuation, std::vector<FieldElem>&& coeffs,
                                  int precision);

  int valuation_ = 0;
  int precision_ = 0;
  int q0_ = 0;
  std::vector<FieldElem> coeffs_;
};

}  // namespace gammalab

namespace Eigen {
template <>
struct NumTraits<gammalab::LaurentScalar> : GenericNumTraits<gammalab::LaurentScalar> {
  using Real = gammalab::LaurentScalar;
  using NonInteger = gammalab::LaurentScalar;
  using Literal = gammalab::LaurentScalar;
  using Nested = gammalab::LaurentScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 256
  };
};
}  // namespace Eigen

#endif  // GAMMALAB_LAURENT_HPP
