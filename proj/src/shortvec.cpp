#include "latkit/shortvec.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace latkit {
namespace {

// Fincke-Pohst form: Q(x) = sum_i q(i,i) * (x_i + sum_{j>i} q(i,j) x_j)^2.
std::vector<std::vector<mpq_class>> quadratic_completion(const ZMat& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = g(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  return q;
}

struct Enumerator {
  const std::vector<std::vector<mpq_class>>& q;
  std::size_t n;
  std::vector<long> x;
  std::vector<std::vector<long>> found;

  Enumerator(const std::vector<std::vector<mpq_class>>& qq, std::size_t nn) : q(qq), n(nn), x(nn, 0) {}

  mpq_class center(std::size_t i) const {
    mpq_class c = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) c -= q[i][j] * x[j];
    return c;
  }

  // Integer interval {v : q_ii (v - c)^2 <= budget}, clipped below by floor_at.
  static bool range(const mpq_class& qii, const mpq_class& c, const mpq_class& budget, long* lo, long* hi) {
    if (sgn(budget) < 0) return false;
    mpq_class t = budget / qii;
    auto fits = [&](long v) {
      mpq_class d = v - c;
      return d * d <= t;
    };
    double cd = c.get_d();
    double s = std::sqrt(std::max(0.0, t.get_d()));
    long l = static_cast<long>(std::floor(cd - s)) - 1;
    long cap = static_cast<long>(std::ceil(cd)) + 1;
    while (!fits(l) && l <= cap) ++l;
    if (!fits(l)) return false;
    while (fits(l - 1)) --l;
    long h = std::max(l, static_cast<long>(std::ceil(cd + s)) + 1);
    while (!fits(h)) --h;
    while (fits(h + 1)) ++h;
    *lo = l;
    *hi = h;
    return true;
  }

  void descend(std::size_t i, const mpq_class& budget, bool zero_above) {
    mpq_class c = center(i);
    long lo = 0;
    long hi = 0;
    if (!range(q[i][i], c, budget, &lo, &hi)) return;
    if (zero_above) lo = std::max(lo, 0L);
    for (long v = lo; v <= hi; ++v) visit(i, v, c, budget, zero_above);
    x[i] = 0;
  }

  void visit(std::size_t i, long v, const mpq_class& c, const mpq_class& budget, bool zero_above) {
    x[i] = v;
    mpq_class d = v - c;
    mpq_class rest = budget - q[i][i] * d * d;
    bool still_zero = zero_above && v == 0;
    if (i == 0) {
      if (!still_zero) found.push_back(x);
      return;
    }
    descend(i - 1, rest, still_zero);
    x[i - 1] = 0;
  }
};

}  // namespace

ZMat pairwise_reduce(const ZMat& positive_gram) {
  const std::size_t n = positive_gram.rows();
  ZMat g = positive_gram;
  ZMat t = ZMat::identity(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        // Replace b_i by b_i - r b_j with r the nearest integer to g_ij / g_jj.
        Integer twice = 2 * g(i, j) + g(j, j);
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Integer(2 * g(j, j)).get_mpz_t());
        if (r == 0) continue;
        Integer new_norm = g(i, i) - 2 * r * g(i, j) + r * r * g(j, j);
        if (new_norm >= g(i, i)) continue;
        for (std::size_t k = 0; k < n; ++k) t(i, k) -= r * t(j, k);
        for (std::size_t k = 0; k < n; ++k) g(i, k) -= r * g(j, k);
        for (std::size_t k = 0; k < n; ++k) g(k, i) = g(i, k);
        g(i, i) = new_norm;
        changed = true;
      }
  }
  return t;
}

ShortVectorReport short_vectors(const IntegralLattice& l, const Integer& bound, const EnumerationOptions& opts) {
  if (!l.is_definite()) throw InputError("short vector enumeration requires a definite lattice");
  ShortVectorReport report;
  report.bound = bound;
  report.negated = l.rank() > 0 && l.is_negative_definite();
  const std::size_t n = l.rank();
  if (bound < 1 || n == 0) return report;

  ZMat g = report.negated ? ZMat(-l.gram()) : l.gram();
  ZMat t = opts.reduce_basis ? pairwise_reduce(g) : ZMat::identity(n);
  ZMat gr = t * g * t.transpose();
  auto q = quadratic_completion(gr);
  mpq_class budget(bound);

  // Outermost coordinate split into independent subtrees.
  Enumerator top(q, n);
  long lo = 0;
  long hi = -1;
  mpq_class c0 = 0;
  if (Enumerator::range(q[n - 1][n - 1], c0, budget, &lo, &hi)) lo = std::max(lo, 0L);
  std::vector<long> values;
  for (long v = lo; v <= hi; ++v) values.push_back(v);

  unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(values.size())));
  std::vector<std::vector<std::vector<long>>> parts(workers);
  auto work = [&](unsigned w) {
    Enumerator e(q, n);
    for (std::size_t k = w; k < values.size(); k += workers) e.visit(n - 1, values[k], c0, budget, true);
    parts[w] = std::move(e.found);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  for (const auto& part : parts)
    for (const auto& xr : part) {
      IntVec v(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        if (xr[i] != 0)
          for (std::size_t k = 0; k < n; ++k) v[k] += xr[i] * t(i, k);
      auto first = std::find_if(v.begin(), v.end(), [](const Integer& z) { return z != 0; });
      if (first != v.end() && *first < 0)
        for (auto& z : v) z = -z;
      Integer nv = l.norm(v);
      if (report.negated) nv = -nv;
      report.vectors.push_back({std::move(v), std::move(nv)});
    }
  std::sort(report.vectors.begin(), report.vectors.end(),
            [](const ShortVector& a, const ShortVector& b) { return a.coords < b.coords; });
  for (const auto& sv : report.vectors) ++report.counts_by_norm[sv.norm];
  return report;
}

Integer minimum(const IntegralLattice& l, const EnumerationOptions& opts) {
  if (l.rank() == 0) throw InputError("minimum of a rank-0 lattice");
  if (!l.is_definite()) throw InputError("minimum requires a definite lattice");
  for (Integer bound = 2;; bound *= 2) {
    ShortVectorReport r = short_vectors(l, bound, opts);
    if (!r.counts_by_norm.empty()) return r.counts_by_norm.begin()->first;
  }
}

}  // namespace latkit
