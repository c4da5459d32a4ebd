#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace latkit {

using Integer = mpz_class;

std::string to_string(const Integer& z);
Integer parse_integer(std::string_view text);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& num, const Integer& den);

  /// Accepts "7", "-3", "p/q" with optional sign.
  static Rat parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Integer floor() const;
  Integer ceil() const;
  Rat abs() const;
  Rat inverse() const;
  /// Representative of this value modulo m in [0, m).
  Rat mod(const Rat& m) const;

  std::string str() const;
  double to_double() const { return q_.get_d(); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

}  // namespace latkit
