#include "gammalab/rational.hpp"

#include <ostream>

#include "gammalab/errors.hpp"

namespace gammalab {

Rat::Rat(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  try {
    num = mpz_class(s.substr(0, slash), 10);
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational '" + s + "'");
  }
  if (den == 0) throw ValidationError("zero denominator in rational '" + s + "'");
  return Rat(mpq_class(num, den));
}

Rat Rat::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational");
  return Rat(mpq_class(1 / value_));
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw DomainError("division by zero rational");
  return Rat(mpq_class(a.value_ / b.value_));
}

std::string Rat::to_string() const { return numerator() + "/" + denominator(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  os << r.numerator();
  if (!r.is_integer()) os << '/' << r.denominator();
  return os;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace gammalab
