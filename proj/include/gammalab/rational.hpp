#ifndef GAMMALAB_RATIONAL_HPP
#define GAMMALAB_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace gammalab {

/// Exact rational number in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT: implicit from integers is intended
  Rat(long num, long den);
  explicit Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rat parse(std::string_view text);

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  const mpq_class& value() const { return value_; }

  Rat inverse() const;

  /// Always "p/q", including a denominator of 1.
  std::string to_string() const;

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ + b.value_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ - b.value_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ * b.value_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& b) { value_ += b.value_; return *this; }
  Rat& operator-=(const Rat& b) { value_ -= b.value_; return *this; }
  Rat& operator*=(const Rat& b) { value_ *= b.value_; return *this; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class value_;
};

Rat abs(const Rat& r);

}  // namespace gammalab

namespace Eigen {
template <>
struct NumTraits<gammalab::Rat> : GenericNumTraits<gammalab::Rat> {
  using Real = gammalab::Rat;
  using NonInteger = gammalab::Rat;
  using Literal = gammalab::Rat;
  using Nested = gammalab::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace gammalab {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = MatrixX<Rat>;
using RatVector = VectorX<Rat>;

template <typename Derived>
bool is_exact_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == typename Derived::Scalar{})) return false;
  return true;
}

}  // namespace gammalab

#endif  // GAMMALAB_RATIONAL_HPP
