#include "latkit/normal_form.hpp"

namespace latkit {
namespace {

// row_a -= q * row_b
void row_axpy(ZMat& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(b, j) != 0) m(a, j) -= q * m(b, j);
}

void col_axpy(ZMat& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, b) != 0) m(i, a) -= q * m(i, b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntVec SmithForm::diagonal() const {
  IntVec out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (x != 0) ++r;
  return r;
}

SmithForm snf(const ZMat& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  ZMat a = m;
  ZMat u = ZMat::identity(rows);
  ZMat v = ZMat::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows;
      std::size_t pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer av = abs(a(i, j));
          if (pi == rows || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) return {std::move(u), std::move(a), std::move(v)};

      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), a(t, t));
        row_axpy(a, i, t, q);
        row_axpy(u, i, t, q);
        if (a(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), a(t, t));
        col_axpy(a, j, t, q);
        col_axpy(v, j, t, q);
        if (a(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      // Divisibility: fold an offending row into row t and redo the step.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(a, t, i, Integer(-1));
            row_axpy(u, t, i, Integer(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

SmithForm snf(const Mat& m) { return snf(to_integer(m, "snf")); }

ZMat hnf(const ZMat& m) {
  ZMat a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (p == rows || abs(a(i, c)) < abs(a(p, c)))) p = i;
      if (p == rows) break;
      a.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        row_axpy(a, i, r, floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) row_axpy(a, i, r, floor_div(a(i, c), a(r, c)));
    ++r;
  }
  return a.row_block(0, r);
}

Mat hnf_rowspan(const Mat& m) {
  Integer d = common_denominator(m);
  Mat scaled = m * Rat(d);
  Mat h = to_rat(hnf(to_integer(scaled, "hnf_rowspan")));
  return h * Rat(Integer(1), d);
}

ZMat integer_kernel(const ZMat& m) {
  SmithForm s = snf(m);
  std::size_t r = s.rank();
  ZMat basis(m.cols() - r, m.cols());
  for (std::size_t k = r; k < m.cols(); ++k)
    for (std::size_t i = 0; i < m.cols(); ++i) basis(k - r, i) = s.v(i, k);
  return hnf(basis);
}

Saturation saturate_rows(const ZMat& s) {
  SmithForm f = snf(s);
  std::size_t r = f.rank();
  if (r < s.rows()) throw RankError("saturation: rows are linearly dependent");
  // s = U^-1 D V^-1, so the saturation is spanned by the first r rows of V^-1.
  Mat vinv = inverse(to_rat(f.v));
  ZMat basis = to_integer(vinv, "saturation").row_block(0, r);
  Integer index = 1;
  for (std::size_t i = 0; i < r; ++i) index *= f.d(i, i);
  return {hnf(basis), index};
}

}  // namespace latkit
