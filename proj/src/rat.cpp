#include "latkit/rat.hpp"

#include "latkit/error.hpp"

namespace latkit {

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw InputError("empty integer literal");
  Integer z;
  if (z.set_str(s, 10) != 0) throw InputError("malformed integer '" + std::string(text) + "'");
  return z;
}

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

Integer Rat::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rat::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Rat(den(), num());
}

Rat Rat::mod(const Rat& m) const {
  Rat k(((*this) / m).floor());
  return *this - k * m;
}

std::string Rat::str() const { return q_.get_str(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace latkit
