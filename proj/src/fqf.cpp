#include "latkit/fqf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace latkit {
namespace {

constexpr long kFullPruneLimit = 4096;
constexpr long kEnumerationLimit = 1L << 22;

long small(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("finite quadratic form: invariant factor too large");
  return z.get_si();
}

Rat mod1(const Rat& r) { return r.mod(Rat(1)); }
Rat mod2(const Rat& r) { return r.mod(Rat(2)); }

}  // namespace

Integer FiniteQuadraticForm::order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

Rat FiniteQuadraticForm::q(const GroupElement& x) const {
  if (!has_q) throw Error("quadratic form is undefined for odd lattices");
  Rat s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    s += Rat(x[i]) * Rat(x[i]) * q_values[i];
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j] != 0) s += Rat(2) * Rat(x[i]) * Rat(x[j]) * b_matrix(i, j);
  }
  return mod2(s);
}

Rat FiniteQuadraticForm::b(const GroupElement& x, const GroupElement& y) const {
  Rat s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += Rat(x[i]) * Rat(y[j]) * b_matrix(i, j);
  }
  return mod1(s);
}

long FiniteQuadraticForm::element_order(const GroupElement& x) const {
  long ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    long d = small(invariant_factors[i]);
    long c = ((x[i] % d) + d) % d;
    ord = std::lcm(ord, d / std::gcd(c, d));
  }
  return ord;
}

GroupElement FiniteQuadraticForm::add(const GroupElement& x, const GroupElement& y) const {
  GroupElement z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    long d = small(invariant_factors[i]);
    z[i] = (((x[i] + y[i]) % d) + d) % d;
  }
  return z;
}

std::vector<GroupElement> FiniteQuadraticForm::elements() const {
  Integer total = order();
  if (total > kEnumerationLimit) throw Error("finite quadratic form too large to enumerate");
  std::vector<GroupElement> out;
  out.reserve(total.get_ui());
  const std::size_t m = num_generators();
  GroupElement x(m, 0);
  if (m == 0) return {x};
  for (;;) {
    out.push_back(x);
    std::size_t i = m - 1;
    for (;;) {
      if (++x[i] < small(invariant_factors[i])) break;
      x[i] = 0;
      if (i == 0) return out;
      --i;
    }
  }
}

std::map<Integer, std::vector<unsigned>> FiniteQuadraticForm::primary_decomposition() const {
  std::map<Integer, std::vector<unsigned>> out;
  for (const auto& d : invariant_factors) {
    Integer rest = d;
    for (Integer p = 2; p * p <= rest; ++p) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e) out[p].push_back(e);
    }
    if (rest > 1) out[rest].push_back(1);
  }
  return out;
}

std::string FiniteQuadraticForm::primary_string() const {
  if (is_trivial()) return "trivial";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, exps] : primary_decomposition()) {
    std::map<unsigned, unsigned> counts;
    for (auto e : exps) ++counts[e];
    for (const auto& [e, c] : counts) {
      if (!first) os << " + ";
      first = false;
      os << "(Z/" << p;
      if (e > 1) os << "^" << e;
      os << ")";
      if (c > 1) os << "^" << c;
    }
  }
  return os.str();
}

std::string FiniteQuadraticForm::invariant_string() const {
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) s += (i ? "," : "") + to_string(invariant_factors[i]);
  return s;
}

FiniteQuadraticForm discriminant_group(const IntegralLattice& l) {
  const std::size_t n = l.rank();
  SmithForm s = snf(l.gram());
  FiniteQuadraticForm f;
  f.has_q = l.is_even();
  // U G V = D, so the columns of V scaled by 1/d_i generate L*/L.
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = s.d(i, i);
    if (d == 0) throw ConstructionError("discriminant group of a degenerate lattice");
    if (d == 1) continue;
    RatVec lift(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rat x(s.v(k, i), d);
      lift[k] = x - Rat(x.floor());
    }
    f.invariant_factors.push_back(d);
    f.generator_lifts.push_back(std::move(lift));
  }
  const std::size_t m = f.num_generators();
  f.b_matrix = Mat(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) f.b_matrix(i, j) = mod1(l.pair(f.generator_lifts[i], f.generator_lifts[j]));
    if (f.has_q) f.q_values.push_back(mod2(l.norm(f.generator_lifts[i])));
  }
  return f;
}

bool q_b_compatible(const FiniteQuadraticForm& f) {
  if (!f.has_q) return true;
  const std::size_t m = f.num_generators();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      GroupElement x(m, 0), y(m, 0);
      x[i] = 1;
      y[j] = 1;
      Rat lhs = mod2(f.q(f.add(x, y)) - f.q(x) - f.q(y));
      Rat rhs = mod2(Rat(2) * f.b(x, y));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

namespace {

using Signature2 = std::multiset<std::pair<long, Rat>>;

Signature2 order_q_profile(const FiniteQuadraticForm& f, const std::vector<GroupElement>& elems) {
  Signature2 s;
  for (const auto& x : elems) s.emplace(f.element_order(x), f.has_q ? f.q(x) : Rat(0));
  return s;
}

struct Search {
  const FiniteQuadraticForm& f1;
  const FiniteQuadraticForm& f2;
  std::vector<std::vector<GroupElement>> candidates;
  std::vector<GroupElement> chosen;

  bool run(std::size_t i) {
    if (i == candidates.size()) return verify_fqf_isomorphism(f1, f2, FqfIsomorphism{chosen});
    for (const auto& y : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = f2.b(y, chosen[j]) == f1.b_matrix(i, j);
      if (!ok) continue;
      chosen.push_back(y);
      if (run(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

bool verify_fqf_isomorphism(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                            const FqfIsomorphism& iso) {
  const std::size_t m = f1.num_generators();
  if (iso.images.size() != m || f1.order() != f2.order()) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (f2.element_order(iso.images[i]) != small(f1.invariant_factors[i])) return false;
    if (f1.has_q && f2.has_q && !(f2.q(iso.images[i]) == f1.q_values[i])) return false;
    for (std::size_t j = 0; j < m; ++j)
      if (!(f2.b(iso.images[i], iso.images[j]) == f1.b_matrix(i, j))) return false;
  }
  // Injectivity on the whole group.
  std::set<GroupElement> seen;
  for (const auto& x : f1.elements()) {
    GroupElement y(f2.num_generators(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      GroupElement step = iso.images[i];
      for (auto& c : step) c *= x[i];
      y = f2.add(y, step);
    }
    if (!seen.insert(y).second) return false;
  }
  return true;
}

std::optional<FqfIsomorphism> fqf_isomorphic(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2) {
  if (f1.invariant_factors != f2.invariant_factors) return std::nullopt;
  if (f1.has_q != f2.has_q) return std::nullopt;
  if (f1.is_trivial()) return FqfIsomorphism{};

  const auto elems2 = f2.elements();
  if (f1.order() <= kFullPruneLimit) {
    if (order_q_profile(f1, f1.elements()) != order_q_profile(f2, elems2)) return std::nullopt;
  }

  Search search{f1, f2, {}, {}};
  for (std::size_t i = 0; i < f1.num_generators(); ++i) {
    std::vector<GroupElement> cand;
    const long want_order = small(f1.invariant_factors[i]);
    for (const auto& y : elems2) {
      if (f2.element_order(y) != want_order) continue;
      if (f1.has_q && !(f2.q(y) == f1.q_values[i])) continue;
      if (!(f2.b(y, y) == f1.b_matrix(i, i))) continue;
      cand.push_back(y);
    }
    if (cand.empty()) return std::nullopt;
    search.candidates.push_back(std::move(cand));
  }
  if (search.run(0)) return FqfIsomorphism{search.chosen};
  return std::nullopt;
}

}  // namespace latkit
