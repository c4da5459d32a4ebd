#include "latkit/matrix.hpp"

namespace latkit {

Mat to_rat(const ZMat& m) {
  Mat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

bool is_integral(const Mat& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rat& x) { return x.is_integer(); });
}

ZMat to_integer(const Mat& m, const std::string& what) {
  ZMat z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer())
        throw InputError(what + ": non-integer entry " + m(i, j).str() + " at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      z(i, j) = m(i, j).num();
    }
  return z;
}

Integer common_denominator(const Mat& m) {
  Integer d = 1;
  for (const auto& x : m.data()) d = lcm(d, x.den());
  return d;
}

// Fraction-free Bareiss elimination; every intermediate division is exact.
Integer det(const ZMat& m) {
  if (!m.is_square()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMat a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat det(const Mat& m) { return field_det(m); }

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) s += a[i] * b[i];
  return s;
}

RatVec mat_vec(const Mat& m, std::span<const Rat> v) {
  if (m.cols() != v.size()) throw InputError("mat_vec: length mismatch");
  RatVec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) r[i] = dot(m.row(i), v);
  return r;
}

Rat pair(const Mat& gram, std::span<const Rat> a, std::span<const Rat> b) {
  RatVec gb = mat_vec(gram, b);
  return dot(a, gb);
}

}  // namespace latkit
