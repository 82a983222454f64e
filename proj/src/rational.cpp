#include "hamindex/rational.hpp"

#include "hamindex/errors.hpp"

namespace hamindex {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterOutOfRange("zero denominator");
  // cpp_rational rejects a negative denominator.
  v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw ParameterOutOfRange("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

Rational Rational::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

}  // namespace hamindex
