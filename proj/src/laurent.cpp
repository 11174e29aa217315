#include "gammalab/laurent.hpp"

#include <algorithm>
#include <cstring>
#include <ostream>
#include <sstream>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

int merge_q0(int a, int b) {
  if (a == 0) return b;
  if (b != 0 && a != b) throw DomainError("Laurent scalars over different residue fields");
  return a;
}

}  // namespace

LaurentScalar LaurentScalar::normalized(int q0, int valuation, std::vector<FieldElem>&& coeffs,
                                        int precision) {
  LaurentScalar r;
  r.q0_ = q0;
  r.precision_ = precision;
  std::size_t z = 0;
  while (z < coeffs.size() && coeffs[z].is_zero()) ++z;
  if (z == coeffs.size()) return r;
  if (z > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(z));
  coeffs.resize(static_cast<std::size_t>(precision), ResidueField::get(q0).zero());
  r.valuation_ = valuation + static_cast<int>(z);
  r.coeffs_ = std::move(coeffs);
  return r;
}

LaurentScalar LaurentScalar::zero(int q0, int precision) {
  ResidueField::get(q0);
  LaurentScalar r;
  r.q0_ = q0;
  r.precision_ = precision;
  return r;
}

LaurentScalar LaurentScalar::one(int q0, int precision) {
  return monomial(ResidueField::get(q0).one(), 0, precision);
}

LaurentScalar LaurentScalar::uniformizer(int q0, int precision) {
  return monomial(ResidueField::get(q0).one(), 1, precision);
}

LaurentScalar LaurentScalar::monomial(FieldElem c, int valuation, int precision) {
  if (precision < 1) throw DomainError("Laurent precision must be positive");
  if (c.q0() == 0) throw DomainError("monomial needs a tagged field element");
  std::vector<FieldElem> coeffs{c};
  return normalized(c.q0(), valuation, std::move(coeffs), precision);
}

LaurentScalar LaurentScalar::from_coefficients(int q0, int valuation, std::vector<FieldElem> coeffs,
                                               int precision) {
  if (precision < 1) throw DomainError("Laurent precision must be positive");
  ResidueField::get(q0);
  if (static_cast<int>(coeffs.size()) > precision) {
    // Keep only what the window can hold once leading zeros are gone.
    std::size_t z = 0;
    while (z < coeffs.size() && coeffs[z].is_zero()) ++z;
    const std::size_t keep = std::min(coeffs.size(), z + static_cast<std::size_t>(precision));
    coeffs.resize(keep);
  }
  return normalized(q0, valuation, std::move(coeffs), precision);
}

int LaurentScalar::significant_length() const {
  int len = static_cast<int>(coeffs_.size());
  while (len > 0 && coeffs_[len - 1].is_zero()) --len;
  return len;
}

FieldElem LaurentScalar::leading_coefficient() const {
  if (is_zero()) throw DomainError("zero has no leading coefficient");
  return coeffs_.front();
}

FieldElem LaurentScalar::coefficient(int k) const {
  if (is_zero()) return q0_ ? ResidueField::get(q0_).zero() : FieldElem{};
  if (k < valuation_) return ResidueField::get(q0_).zero();
  if (k >= valuation_ + precision_)
    throw PrecisionExhausted("coefficient of t^" + std::to_string(k) + " lies beyond the precision window");
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

LaurentScalar LaurentScalar::inverse() const {
  if (is_zero()) throw PrecisionExhausted("inverse of a scalar indistinguishable from zero");
  const auto& f = ResidueField::get(q0_);
  const int len = significant_length();
  std::vector<FieldElem> out(static_cast<std::size_t>(precision_), f.zero());
  const int inv0 = f.inv(coeffs_[0].code());
  out[0] = f.element(inv0);
  for (int k = 1; k < precision_; ++k) {
    int acc = 0;
    const int top = std::min(k, len - 1);
    for (int j = 1; j <= top; ++j) {
      const int cj = coeffs_[j].code();
      if (cj == 0) continue;
      acc = f.add(acc, f.mul(cj, out[k - j].code()));
    }
    out[k] = f.element(f.neg(f.mul(inv0, acc)));
  }
  return normalized(q0_, -valuation_, std::move(out), precision_);
}

LaurentScalar LaurentScalar::frobenius() const {
  LaurentScalar r = *this;
  for (auto& c : r.coeffs_) c = c.frobenius();
  return r;
}

bool LaurentScalar::is_frobenius_fixed() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](FieldElem c) { return c.in_subfield(); });
}

LaurentScalar LaurentScalar::shifted(int k) const {
  LaurentScalar r = *this;
  if (!r.is_zero()) r.valuation_ += k;
  return r;
}

LaurentScalar LaurentScalar::truncated(int bound) const {
  if (is_zero() || bound <= valuation_) {
    LaurentScalar r;
    r.q0_ = q0_;
    r.precision_ = precision_;
    return r;
  }
  if (bound > valuation_ + precision_) {
    throw PrecisionExhausted("reduction modulo t^" + std::to_string(bound) +
                             " needs coefficients beyond the window ending at t^" +
                             std::to_string(valuation_ + precision_));
  }
  std::vector<FieldElem> c(coeffs_.begin(), coeffs_.begin() + (bound - valuation_));
  return normalized(q0_, valuation_, std::move(c), precision_);
}

LaurentScalar LaurentScalar::with_precision(int precision) const {
  if (precision < 1) throw DomainError("Laurent precision must be positive");
  if (is_zero()) {
    LaurentScalar r = *this;
    r.precision_ = precision;
    return r;
  }
  std::vector<FieldElem> c = coeffs_;
  c.resize(static_cast<std::size_t>(std::min<int>(precision, static_cast<int>(c.size()))));
  return normalized(q0_, valuation_, std::move(c), precision);
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero()) return b.q0_ || !a.q0_ ? b : LaurentScalar::zero(a.q0_, a.precision_);
  if (b.is_zero()) return a;
  const int q0 = merge_q0(a.q0_, b.q0_);
  const auto& f = ResidueField::get(q0);
  const int prec = std::min(a.precision_, b.precision_);
  const int v = std::min(a.valuation_, b.valuation_);
  std::vector<FieldElem> out(static_cast<std::size_t>(prec), f.zero());
  const int la = a.significant_length();
  const int lb = b.significant_length();
  for (int i = 0; i < la; ++i) {
    const int k = a.valuation_ - v + i;
    if (k >= prec) break;
    out[k] = a.coeffs_[i];
  }
  for (int i = 0; i < lb; ++i) {
    const int k = b.valuation_ - v + i;
    if (k >= prec) break;
    out[k] = f.element(f.add(out[k].code(), b.coeffs_[i].code()));
  }
  return LaurentScalar::normalized(q0, v, std::move(out), prec);
}

LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return a + (-b); }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  const int q0 = merge_q0(a.q0_, b.q0_);
  if (a.is_zero() || b.is_zero()) {
    LaurentScalar r;
    r.q0_ = q0;
    r.precision_ = a.is_zero() ? (b.is_zero() ? std::min(a.precision_, b.precision_) : b.precision_)
                               : a.precision_;
    return r;
  }
  const auto& f = ResidueField::get(q0);
  const int prec = std::min(a.precision_, b.precision_);
  const int la = std::min(a.significant_length(), prec);
  const int lb = std::min(b.significant_length(), prec);
  std::vector<FieldElem> out(static_cast<std::size_t>(prec), f.zero());
  for (int i = 0; i < la; ++i) {
    const int ai = a.coeffs_[i].code();
    if (ai == 0) continue;
    const int top = std::min(lb, prec - i);
    for (int j = 0; j < top; ++j) {
      const int bj = b.coeffs_[j].code();
      if (bj == 0) continue;
      out[i + j] = f.element(f.add(out[i + j].code(), f.mul(ai, bj)));
    }
  }
  return LaurentScalar::normalized(q0, a.valuation_ + b.valuation_, std::move(out), prec);
}

LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b) { return a * b.inverse(); }

bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.valuation_ != b.valuation_) return false;
  const int la = a.significant_length();
  if (la != b.significant_length()) return false;
  for (int i = 0; i < la; ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

void LaurentScalar::append_key(std::string& out) const {
  if (is_zero()) {
    out.push_back('\0');
    return;
  }
  const int len = significant_length();
  out.push_back(static_cast<char>(len));
  char buf[sizeof(int)];
  // Offset so that byte-wise order matches numeric order of valuations.
  const unsigned biased = static_cast<unsigned>(valuation_) ^ 0x80000000u;
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((biased >> (24 - 8 * i)) & 0xffu);
  out.append(buf, 4);
  for (int i = 0; i < len; ++i) out.push_back(static_cast<char>(coeffs_[i].code()));
}

std::string LaurentScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentScalar& a) {
  if (a.is_zero()) return os << '0';
  const int len = a.significant_length();
  bool first = true;
  for (int i = 0; i < len; ++i) {
    const FieldElem c = a.coefficients()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c << '*';
    os << "t^" << a.valuation() + i;
  }
  return os;
}

}  // namespace gammalab
