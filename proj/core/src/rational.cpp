#include "liecoh/rational.hpp"

#include <cctype>
#include <ostream>

#include "liecoh/errors.hpp"

namespace liecoh {

Rational::Rational(long num, long den) {
  if (den == 0) throw input_error("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rational Rational::parse(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!valid_integer_token(num))
    throw input_error("rational: cannot parse \"" + s + "\"");
  Rational out;
  if (slash == std::string::npos) {
    out.v_ = mpq_class(mpz_class(num));
    return out;
  }
  const std::string den = s.substr(slash + 1);
  if (!valid_integer_token(den))
    throw input_error("rational: cannot parse \"" + s + "\"");
  mpz_class d(den);
  if (sgn(d) == 0) throw input_error("rational: zero denominator in \"" + s + "\"");
  out.v_ = mpq_class(mpz_class(num), d);
  out.v_.canonicalize();
  return out;
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::abs() const {
  Rational out = *this;
  if (out.sign() < 0) out.v_ = -out.v_;
  return out;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.v_ = -out.v_;
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw input_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace liecoh
