#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latkit/cyc5.hpp"

namespace latkit {

using Exponents = std::vector<int>;

/// Multivariate polynomial with coefficients in Q(w). Zero coefficients are
/// never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t num_vars) : nvars_(num_vars) {}

  static Poly constant(std::size_t num_vars, const Cyc5& c);
  static Poly variable(std::size_t num_vars, std::size_t i);
  static Poly monomial(const Exponents& e, const Cyc5& c = Cyc5(1));

  std::size_t num_vars() const { return nvars_; }
  const std::map<Exponents, Cyc5>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Coefficient of a monomial (zero if absent).
  Cyc5 coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const Cyc5& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Cyc5& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Cyc5& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  Poly pow(unsigned k) const;

  /// P(images[0], ..., images[n-1]); all images share one variable count.
  Poly substitute(const std::vector<Poly>& images) const;
  /// P(A x): x_i is replaced by sum_j A(i, j) x_j.
  Poly compose(const CycMat& a) const;

  /// lambda with *this == lambda * other, if one exists (both nonzero).
  std::optional<Cyc5> scalar_ratio(const Poly& other) const;

  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Cyc5> terms_;
};

/// Dense univariate polynomial over Q(w); coefficient i belongs to t^i.
/// Trailing zeros are trimmed, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Cyc5> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Cyc5>& coeffs() const { return c_; }

  UPoly derivative() const;
  UPoly monic() const;
  /// Remainder of division by a nonzero divisor.
  UPoly mod(const UPoly& divisor) const;

 private:
  void trim();
  std::vector<Cyc5> c_;
};

UPoly gcd(UPoly a, UPoly b);

/// Homogeneous binary form B(s, t) given as a two-variable Poly. Returns the
/// number of distinct zeros in P^1 (requires B nonzero).
int distinct_roots_binary(const Poly& form);

/// The binary form as the univariate polynomial B(1, t).
UPoly dehomogenize(const Poly& form);

}  // namespace latkit
