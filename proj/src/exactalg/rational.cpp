#include "hypsec/exactalg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hypsec {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed rational '" + s + "'");
    return Rational{mpq_class(mpz_class(strip_plus(s)))};
  }
  const std::string n = s.substr(0, slash);
  const std::string d = s.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  mpz_class den(d);
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational{mpq_class(mpz_class(strip_plus(n)), den)};
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational{mpq_class(1 / v_)};
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace hypsec
