#include "nulab/rational.hpp"

#include "nulab/error.hpp"

namespace nulab {

namespace mp = boost::multiprecision;

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::BadParameter, "zero denominator");
  Integer n(num), d(den);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  value_ = mp::cpp_rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorKind::BadParameter, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::from_string(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw Error(ErrorKind::BadParameter, "bad rational '" + std::string(text) + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw Error(ErrorKind::BadParameter, "bad rational '" + std::string(text) + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw Error(ErrorKind::BadParameter, "bad rational '" + std::string(text) + "'");
      }
    }
    return Integer(std::string(part));
  };
  const auto slash = text.find('/');
  Integer num = parse_int(text.substr(0, slash));
  Integer den = slash == std::string_view::npos ? Integer(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::BadParameter, "zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(mp::cpp_rational(num, den));
}

Rational::Integer Rational::numerator() const { return mp::numerator(value_); }
Rational::Integer Rational::denominator() const { return mp::denominator(value_); }

std::string Rational::to_string() const {
  const Integer den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

Rational::Integer Rational::floor() const {
  const Integer num = numerator();
  const Integer den = denominator();
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rational::Integer Rational::ceil() const {
  const Integer num = numerator();
  const Integer den = denominator();
  Integer q = num / den;
  if (num > 0 && q * den != num) q += 1;
  return q;
}

}  // namespace nulab
