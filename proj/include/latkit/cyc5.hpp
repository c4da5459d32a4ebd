#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "latkit/matrix.hpp"
#include "latkit/rat.hpp"

namespace latkit {

/// Element c0 + c1 w + c2 w^2 + c3 w^3 of Q(w), w a primitive 5th root of
/// unity. w^4 is always eliminated through 1 + w + w^2 + w^3 + w^4 = 0, so the
/// coefficient vector is a unique representative.
class Cyc5 {
 public:
  Cyc5() = default;
  Cyc5(int v) : c_{Rat(v), 0, 0, 0} {}          // NOLINT(google-explicit-constructor)
  Cyc5(const Rat& v) : c_{v, 0, 0, 0} {}        // NOLINT(google-explicit-constructor)
  Cyc5(Rat c0, Rat c1, Rat c2, Rat c3) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// w^k for any integer k.
  static Cyc5 omega_pow(long k);
  /// Parses tokens such as "1", "-w^2", "1/2+3*w-w^3", "2*w^4".
  static Cyc5 parse(std::string_view text);

  const Rat& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::array<Rat, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  /// Image under the Galois automorphism w -> w^k, k coprime to 5.
  Cyc5 galois(int k) const;
  /// Field norm down to Q: product of the four conjugates.
  Rat norm() const;
  Cyc5 inverse() const;
  Cyc5 pow(long k) const;

  std::string str() const;

  Cyc5& operator+=(const Cyc5& o);
  Cyc5& operator-=(const Cyc5& o);
  Cyc5& operator*=(const Cyc5& o);
  Cyc5& operator/=(const Cyc5& o) { return *this *= o.inverse(); }

  friend Cyc5 operator+(Cyc5 a, const Cyc5& b) { return a += b; }
  friend Cyc5 operator-(Cyc5 a, const Cyc5& b) { return a -= b; }
  friend Cyc5 operator*(Cyc5 a, const Cyc5& b) { return a *= b; }
  friend Cyc5 operator/(Cyc5 a, const Cyc5& b) { return a /= b; }
  friend Cyc5 operator-(const Cyc5& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }
  friend bool operator==(const Cyc5& a, const Cyc5& b) { return a.c_ == b.c_; }
  friend std::ostream& operator<<(std::ostream& os, const Cyc5& a) { return os << a.str(); }

 private:
  std::array<Rat, 4> c_{};
};

using CycMat = Matrix<Cyc5>;

/// Free-function forms of the field operations.
inline Cyc5 cyc_mul(const Cyc5& a, const Cyc5& b) { return a * b; }
inline Cyc5 cyc_inv(const Cyc5& a) { return a.inverse(); }
inline Cyc5 cyc_pow(const Cyc5& a, long k) { return a.pow(k); }

}  // namespace latkit
