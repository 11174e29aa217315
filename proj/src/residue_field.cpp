#include "gammalab/residue_field.hpp"

#include <ostream>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

using Poly = std::vector<int>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  // m monic
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly code_to_poly(int code, int p, int len) {
  Poly r(len, 0);
  for (int i = 0; i < len; ++i) {
    r[i] = code % p;
    code /= p;
  }
  return r;
}

int poly_to_code(const Poly& a, int p) {
  int code = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) code = code * p + a[i];
  return code;
}

bool irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  int count = 1;
  for (int k = 1; k <= d / 2; ++k) {
    count *= p;
    for (int c = 0; c < count; ++c) {
      Poly g = code_to_poly(c, p, k);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly first_irreducible(int p, int degree) {
  int count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (int c = 0; c < count; ++c) {
    Poly f = code_to_poly(c, p, degree);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

}  // namespace

bool ResidueField::supported(int q0) { return q0 == 2 || q0 == 3 || q0 == 4 || q0 == 5; }

const ResidueField& ResidueField::get(int q0) {
  static const ResidueField f2(2), f3(3), f4(4), f5(5);
  switch (q0) {
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    case 5: return f5;
    default:
      throw DomainError("unsupported residue field size q0 = " + std::to_string(q0) +
                        " (supported: 2, 3, 4, 5)");
  }
}

ResidueField::ResidueField(int q0) : q0_(q0) {
  switch (q0) {
    case 2: p_ = 2; degree_ = 2; break;
    case 3: p_ = 3; degree_ = 2; break;
    case 4: p_ = 2; degree_ = 4; break;
    case 5: p_ = 5; degree_ = 2; break;
    default: throw DomainError("unsupported q0");
  }
  order_ = q0 * q0;
  modulus_ = first_irreducible(p_, degree_);

  const auto q = static_cast<std::size_t>(order_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.resize(q);
  frob_.resize(q);
  for (int a = 0; a < order_; ++a) {
    const Poly pa = code_to_poly(a, p_, degree_);
    Poly na(degree_);
    for (int i = 0; i < degree_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(poly_to_code(na, p_));
    for (int b = 0; b < order_; ++b) {
      const Poly pb = code_to_poly(b, p_, degree_);
      Poly s(degree_);
      for (int i = 0; i < degree_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[a * order_ + b] = static_cast<std::uint8_t>(poly_to_code(s, p_));
      Poly prod(2 * degree_, 0);
      for (int i = 0; i < degree_; ++i)
        for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
      mul_[a * order_ + b] = static_cast<std::uint8_t>(poly_to_code(poly_mod(prod, modulus_, p_), p_));
    }
  }
  inv_[0] = 0;
  for (int a = 1; a < order_; ++a)
    for (int b = 1; b < order_; ++b)
      if (mul_[a * order_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
  for (int a = 0; a < order_; ++a) {
    int r = 1;
    for (int k = 0; k < q0_; ++k) r = mul_[r * order_ + a];
    frob_[a] = static_cast<std::uint8_t>(r);
  }
}

FieldElem ResidueField::element(int code) const {
  if (code < 0 || code >= order_) throw DomainError("field element code out of range");
  return {static_cast<std::uint8_t>(q0_), static_cast<std::uint8_t>(code)};
}

FieldElem ResidueField::from_digits(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != degree_)
    throw DomainError("digit vector length must equal the extension degree");
  Poly a(degree_);
  for (int i = 0; i < degree_; ++i) a[i] = ((digits[i] % p_) + p_) % p_;
  return element(poly_to_code(a, p_));
}

FieldElem ResidueField::from_int(long value) const {
  const long r = ((value % p_) + p_) % p_;
  return element(static_cast<int>(r));
}

FieldElem ResidueField::x() const { return element(p_); }

FieldElem ResidueField::primitive_element() const {
  for (int c = 2; c < order_; ++c) {
    int r = c;
    int k = 1;
    while (r != 1) {
      r = mul_[r * order_ + c];
      ++k;
    }
    if (k == order_ - 1) return element(c);
  }
  return element(order_ == 2 ? 1 : 2);
}

std::vector<FieldElem> ResidueField::elements() const {
  std::vector<FieldElem> out;
  out.reserve(order_);
  for (int c = 0; c < order_; ++c) out.push_back(element(c));
  return out;
}

std::vector<FieldElem> ResidueField::subfield_elements() const {
  std::vector<FieldElem> out;
  for (int c = 0; c < order_; ++c)
    if (frob_[c] == c) out.push_back(element(c));
  return out;
}

// FieldElem ---------------------------------------------------------------

namespace {

int common_q0(FieldElem a, FieldElem b) {
  if (a.q0() == 0) return b.q0();
  if (b.q0() != 0 && b.q0() != a.q0()) throw DomainError("field elements from different residue fields");
  return a.q0();
}

}  // namespace

std::vector<int> FieldElem::digits() const {
  if (q0_ == 0) return {};
  const auto& f = ResidueField::get(q0_);
  return code_to_poly(code_, f.characteristic(), f.degree());
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in GF(q)");
  const auto& f = ResidueField::get(q0_);
  return f.element(f.inv(code_));
}

FieldElem FieldElem::frobenius() const {
  if (q0_ == 0) return *this;
  const auto& f = ResidueField::get(q0_);
  return f.element(f.frob(code_));
}

FieldElem FieldElem::operator-() const {
  if (q0_ == 0) return *this;
  const auto& f = ResidueField::get(q0_);
  return f.element(f.neg(code_));
}

FieldElem operator+(FieldElem a, FieldElem b) {
  const int q0 = common_q0(a, b);
  if (q0 == 0) return {};
  const auto& f = ResidueField::get(q0);
  return f.element(f.add(a.code_, b.code_));
}

FieldElem operator-(FieldElem a, FieldElem b) { return a + (-b); }

FieldElem operator*(FieldElem a, FieldElem b) {
  const int q0 = common_q0(a, b);
  if (q0 == 0) return {};
  const auto& f = ResidueField::get(q0);
  return f.element(f.mul(a.code_, b.code_));
}

FieldElem operator/(FieldElem a, FieldElem b) { return a * b.inverse(); }

std::ostream& operator<<(std::ostream& os, FieldElem a) {
  const auto d = a.digits();
  if (d.empty()) return os << '0';
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os << ']';
}

}  // namespace gammalab
