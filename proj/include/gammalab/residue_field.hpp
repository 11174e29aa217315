#ifndef GAMMALAB_RESIDUE_FIELD_HPP
#define GAMMALAB_RESIDUE_FIELD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gammalab {

class ResidueField;

/// Element of GF(q0^2) = GF(p)[x]/(f).
///
/// Stored as the base-p code sum(d_i p^i) of its coefficient digits, tagged by
/// q0 so that arithmetic can find the shared tables. A default-constructed
/// element is an untagged zero; it behaves as zero in any field, which is what
/// Eigen expects when it value-initializes matrix storage.
class FieldElem {
 public:
  FieldElem() = default;

  int q0() const { return q0_; }
  int code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return q0_ != 0 && code_ == 1; }

  /// Prime-field digits, lowest power of x first; length equals deg(f).
  std::vector<int> digits() const;

  FieldElem inverse() const;
  /// x -> x^{q0}; generates Gal(GF(q0^2)/GF(q0)).
  FieldElem frobenius() const;
  bool in_subfield() const { return frobenius() == *this; }

  FieldElem operator-() const;
  friend FieldElem operator+(FieldElem a, FieldElem b);
  friend FieldElem operator-(FieldElem a, FieldElem b);
  friend FieldElem operator*(FieldElem a, FieldElem b);
  friend FieldElem operator/(FieldElem a, FieldElem b);
  FieldElem& operator+=(FieldElem b) { return *this = *this + b; }
  FieldElem& operator-=(FieldElem b) { return *this = *this - b; }
  FieldElem& operator*=(FieldElem b) { return *this = *this * b; }
  FieldElem& operator/=(FieldElem b) { return *this = *this / b; }

  friend bool operator==(FieldElem a, FieldElem b) { return a.code_ == b.code_; }
  friend auto operator<=>(FieldElem a, FieldElem b) { return a.code_ <=> b.code_; }

  friend std::ostream& operator<<(std::ostream& os, FieldElem a);

 private:
  friend class ResidueField;
  FieldElem(std::uint8_t q0, std::uint8_t code) : q0_(q0), code_(code) {}

  std::uint8_t q0_ = 0;
  std::uint8_t code_ = 0;
};

/// The residue field GF(q0^2) of E together with its Frobenius.
///
/// One immutable instance per supported q0 in {2, 3, 4, 5}; the defining
/// polynomial is the monic irreducible of degree 2k over GF(p) (q0 = p^k) with
/// the smallest base-p code, so element codes are reproducible across runs.
class ResidueField {
 public:
  static const ResidueField& get(int q0);
  static bool supported(int q0);

  int q0() const { return q0_; }
  int q() const { return order_; }
  int characteristic() const { return p_; }
  int degree() const { return degree_; }
  int order() const { return order_; }
  /// Coefficients of the defining polynomial, constant term first, leading 1 last.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem zero() const { return {static_cast<std::uint8_t>(q0_), 0}; }
  FieldElem one() const { return {static_cast<std::uint8_t>(q0_), 1}; }
  FieldElem element(int code) const;
  FieldElem from_digits(std::span<const int> digits) const;
  FieldElem from_int(long value) const;
  /// The class of x in GF(p)[x]/(f).
  FieldElem x() const;
  /// Smallest-code element generating the multiplicative group.
  FieldElem primitive_element() const;
  /// All elements in code order.
  std::vector<FieldElem> elements() const;
  /// The q0 elements of GF(q0), in code order.
  std::vector<FieldElem> subfield_elements() const;

  int add(int a, int b) const { return add_[a * order_ + b]; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }
  int frob(int a) const { return frob_[a]; }

 private:
  explicit ResidueField(int q0);

  int q0_;
  int p_;
  int degree_;
  int order_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_, frob_;
};

}  // namespace gammalab

namespace Eigen {
template <>
struct NumTraits<gammalab::FieldElem> : GenericNumTraits<gammalab::FieldElem> {
  using Real = gammalab::FieldElem;
  using NonInteger = gammalab::FieldElem;
  using Literal = gammalab::FieldElem;
  using Nested = gammalab::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
};
}  // namespace Eigen

#endif  // GAMMALAB_RESIDUE_FIELD_HPP
