#include "latkit/k3fam.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "latkit/error.hpp"

namespace latkit {
namespace {

int mod5(long v) { return static_cast<int>(((v % 5) + 5) % 5); }

// r with r^2 == q, if q is the square of a rational.
std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q.sign() < 0) return std::nullopt;
  Integer n = q.num();
  Integer d = q.den();
  Integer rn = sqrt(n);
  Integer rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rat(rn, rd);
}

// Restriction of f to the span of the columns of `basis`.
Poly restrict_to_span(const Poly& f, const CycMat& basis) { return f.compose(basis); }

// Drop zero polynomials and scalar duplicates.
std::vector<Poly> independent(const std::vector<Poly>& polys) {
  std::vector<Poly> out;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const Poly& q) { return p.scalar_ratio(q).has_value(); });
    if (!dup) out.push_back(p);
  }
  return out;
}

// Distinct common zeros in P^1 of nonzero binary forms.
int common_roots_binary(const std::vector<Poly>& forms) {
  bool at_infinity = true;
  std::optional<UPoly> g;
  for (const auto& b : forms) {
    UPoly f = dehomogenize(b);
    if (f.degree() == b.degree()) at_infinity = false;
    g = g ? gcd(*g, f) : f.monic();
  }
  int finite = 0;
  if (g && g->degree() > 0) finite = g->degree() - gcd(*g, g->derivative()).degree();
  return finite + (at_infinity ? 1 : 0);
}

// Coefficients of f in powers of variable 0: result[k] multiplies x0^k and
// is a polynomial in the remaining variables.
std::vector<Poly> coefficients_in_first(const Poly& f) {
  const std::size_t n = f.num_vars();
  std::vector<Poly> out;
  for (const auto& [e, c] : f.terms()) {
    auto k = static_cast<std::size_t>(e[0]);
    while (out.size() <= k) out.emplace_back(n - 1);
    out[k].add_term(Exponents(e.begin() + 1, e.end()), c);
  }
  return out;
}

Poly sylvester_resultant(const Poly& f, const Poly& g) {
  const int df = f.degree();
  const int dg = g.degree();
  auto cf = coefficients_in_first(f);
  auto cg = coefficients_in_first(g);
  cf.resize(static_cast<std::size_t>(df) + 1, Poly(f.num_vars() - 1));
  cg.resize(static_cast<std::size_t>(dg) + 1, Poly(g.num_vars() - 1));
  const auto size = static_cast<std::size_t>(df + dg);
  std::vector<std::vector<Poly>> m(size, std::vector<Poly>(size, Poly(f.num_vars() - 1)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(dg); ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(df); ++j) m[i][i + j] = cf[static_cast<std::size_t>(df) - j];
  for (std::size_t i = 0; i < static_cast<std::size_t>(df); ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(dg); ++j)
      m[static_cast<std::size_t>(dg) + i][i + j] = cg[static_cast<std::size_t>(dg) - j];
  return poly_det(m);
}

Cyc5 evaluate(const Poly& p, const std::vector<Cyc5>& x) {
  Cyc5 s(0);
  for (const auto& [e, c] : p.terms()) {
    Cyc5 t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= x[i].pow(e[i]);
    s += t;
  }
  return s;
}

}  // namespace

int MonomialFamily::degree_of(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * (degrees.empty() ? 1 : degrees[i]);
  return d;
}

void MonomialFamily::validate() const {
  if (weights.size() != num_vars) throw InputError(name + ": weights length does not match variable count");
  if (!degrees.empty() && degrees.size() != num_vars)
    throw InputError(name + ": degrees length does not match variable count");
  for (const auto& m : monomials) {
    if (m.size() != num_vars) throw InputError(name + ": monomial length does not match variable count");
    if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; })) throw InputError(name + ": negative exponent");
    if (degree_of(m) != degree_of(monomials.front())) throw InputError(name + ": monomials of different degrees");
  }
  for (auto [a, b] : coefficient_symmetry)
    if (a >= monomials.size() || b >= monomials.size()) throw InputError(name + ": symmetry index out of range");
}

Poly MonomialFamily::polynomial(const std::vector<Cyc5>& coeffs) const {
  if (!coeffs.empty() && coeffs.size() != monomials.size())
    throw InputError(name + ": expected one coefficient per monomial");
  Poly p(num_vars);
  for (std::size_t i = 0; i < monomials.size(); ++i) p.add_term(monomials[i], coeffs.empty() ? Cyc5(1) : coeffs[i]);
  return p;
}

int sigma_weight(const Exponents& m, const std::vector<int>& weights) {
  if (m.size() != weights.size()) throw InputError("sigma_weight: exponent and weight lengths differ");
  long s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += static_cast<long>(m[i]) * weights[i];
  return mod5(s);
}

Invariance is_invariant_family(const MonomialFamily& f) {
  Invariance r;
  for (const auto& m : f.monomials) r.monomial_weights.push_back(sigma_weight(m, f.weights));
  r.weight = r.monomial_weights.empty() ? 0 : r.monomial_weights.front();
  r.invariant = std::all_of(r.monomial_weights.begin(), r.monomial_weights.end(), [&](int w) { return w == r.weight; });
  return r;
}

std::vector<Exponents> weight_space(const std::vector<int>& weights, const std::vector<int>& degrees, int degree,
                                    int weight) {
  const std::size_t n = weights.size();
  if (!degrees.empty() && degrees.size() != n) throw InputError("weight_space: degrees length mismatch");
  std::vector<Exponents> out;
  Exponents e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      if (left == 0 && sigma_weight(e, weights) == mod5(weight)) out.push_back(e);
      return;
    }
    int step = degrees.empty() ? 1 : degrees[i];
    for (int k = left / step; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k * step);
    }
    e[i] = 0;
  };
  rec(0, degree);
  return out;
}

ProjectiveMap::ProjectiveMap(CycMat m) : m_(std::move(m)) {
  if (!m_.is_square()) throw InputError("projective map must be square");
  if (m_.rows() > 0 && field_det(m_).is_zero()) throw InputError("projective map must be invertible");
}

ProjectiveMap ProjectiveMap::inverse() const { return ProjectiveMap(latkit::inverse(m_)); }

ProjectiveMap diagonal_map(const std::vector<int>& weights) {
  CycMat m(weights.size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) m(i, i) = Cyc5::omega_pow(weights[i]);
  return ProjectiveMap(std::move(m));
}

ProjectiveMap permutation_map(const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
  const std::size_t n = perm.size();
  CycMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n) throw InputError("permutation index out of range");
    m(i, perm[i]) = signs.empty() ? Cyc5(1) : Cyc5(signs.at(i));
  }
  return ProjectiveMap(std::move(m));
}

std::optional<Cyc5> pgl_ratio(const CycMat& a, const CycMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  std::optional<Cyc5> lambda;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j).is_zero()) {
        if (!a(i, j).is_zero()) return std::nullopt;
        continue;
      }
      Cyc5 r = a(i, j) / b(i, j);
      if (!lambda) {
        if (r.is_zero()) return std::nullopt;
        lambda = r;
      } else if (!(r == *lambda)) {
        return std::nullopt;
      }
    }
  return lambda;
}

bool pgl_equal(const ProjectiveMap& a, const ProjectiveMap& b) {
  return pgl_ratio(a.matrix(), b.matrix()).has_value();
}

bool is_scalar(const CycMat& m) {
  return m.rows() > 0 && pgl_ratio(m, CycMat::identity(m.rows())).has_value();
}

bool dihedral_in_pgl(const ProjectiveMap& sigma, const ProjectiveMap& iota) {
  if (sigma.dim() != iota.dim()) return false;
  const CycMat& s = sigma.matrix();
  const CycMat& i = iota.matrix();
  if (!is_scalar(i * i)) return false;
  if (!is_scalar(power(s, 5))) return false;
  if (is_scalar(s)) return false;
  return pgl_equal(iota * sigma * iota.inverse(), sigma.inverse());
}

bool preserves(const ProjectiveMap& map, const Poly& p) {
  return !p.is_zero() && p.compose(map.matrix()).scalar_ratio(p).has_value();
}

bool swap_check(const ProjectiveMap& iota, const Poly& p, const Poly& q) {
  return p.compose(iota.inverse().matrix()).scalar_ratio(q).has_value();
}

std::vector<Eigenspace> fixed_locus(const ProjectiveMap& iota) {
  const CycMat& m = iota.matrix();
  const std::size_t n = m.rows();
  CycMat sq = m * m;
  auto c = pgl_ratio(sq, CycMat::identity(n));
  if (!c) throw InputError("fixed_locus: the map is not an involution in PGL");
  // Square root of c of the form r w^k; every power of w is a square.
  std::optional<Cyc5> root;
  for (int j = 0; j < 5 && !root; ++j) {
    Cyc5 rest = *c * Cyc5::omega_pow(-j);
    if (!rest.is_rational()) continue;
    if (auto r = rational_sqrt(rest.coeff(0))) root = Cyc5(*r) * Cyc5::omega_pow(3 * j);
  }
  if (!root) throw InputError("fixed_locus: cannot normalize the involution over Q(w)");
  CycMat normalized = m * root->inverse();
  std::vector<Eigenspace> out;
  for (int sign : {1, -1}) {
    CycMat shifted = normalized;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= Cyc5(sign);
    CycMat kernel = nullspace(shifted);
    if (kernel.rows() == 0) continue;
    out.push_back({Cyc5(sign), kernel.transpose()});
  }
  return out;
}

Poly restrict_to_line(const Poly& f, const std::vector<Cyc5>& p, const std::vector<Cyc5>& q) {
  if (p.size() != f.num_vars() || q.size() != f.num_vars()) throw InputError("line points have the wrong length");
  CycMat basis(f.num_vars(), 2);
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    basis(i, 0) = p[i];
    basis(i, 1) = q[i];
  }
  return f.compose(basis);
}

LineRestriction restrict_and_count(const Poly& f, const std::vector<Cyc5>& p, const std::vector<Cyc5>& q) {
  Poly b = restrict_to_line(f, p, q);
  LineRestriction r;
  r.degree = f.degree();
  r.nonzero = !b.is_zero();
  if (r.nonzero) {
    r.roots_with_multiplicity = b.degree();
    r.distinct_roots = distinct_roots_binary(b);
  }
  return r;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("poly_det: empty matrix");
  if (n > 12) throw InputError("poly_det: matrix too large for cofactor expansion");
  const std::size_t vars = m[0][0].num_vars();
  std::vector<bool> used(n, false);
  std::function<Poly(std::size_t)> rec = [&](std::size_t row) -> Poly {
    if (row == n) return Poly::constant(vars, Cyc5(1));
    Poly sum(vars);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      if (!m[row][c].is_zero()) {
        used[c] = true;
        Poly minor = rec(row + 1);
        used[c] = false;
        Poly term = m[row][c] * minor;
        if (sign > 0)
          sum += term;
        else
          sum -= term;
      }
      sign = -sign;
    }
    return sum;
  };
  return rec(0);
}

PlaneIntersection plane_intersection(const Poly& f, const Poly& g) {
  if (f.num_vars() != 3 || g.num_vars() != 3) throw InputError("plane_intersection: ternary forms expected");
  if (f.is_zero() || g.is_zero() || !f.is_homogeneous() || !g.is_homogeneous())
    throw InputError("plane_intersection: nonzero homogeneous forms expected");
  PlaneIntersection out;
  out.bezout = f.degree() * g.degree();
  // Shears u1 -> u1 + a u0, u2 -> u2 + b u0 move the projection centre.
  bool any = false;
  for (int s = 0; s <= 8 && !out.transversal; ++s)
    for (int a = 0; a <= s && !out.transversal; ++a) {
      int b = s - a;
      if (evaluate(f, {Cyc5(1), Cyc5(a), Cyc5(b)}).is_zero() || evaluate(g, {Cyc5(1), Cyc5(a), Cyc5(b)}).is_zero())
        continue;
      CycMat shear = CycMat::identity(3);
      shear(1, 0) = Cyc5(a);
      shear(2, 0) = Cyc5(b);
      Poly res = sylvester_resultant(f.compose(shear), g.compose(shear));
      any = true;
      if (res.is_zero()) {
        out.resultant_degree = -1;
        out.distinct = 0;
        return out;
      }
      int distinct = distinct_roots_binary(res);
      out.resultant_degree = res.degree();
      out.distinct = std::max(out.distinct, distinct);
      out.transversal = distinct == out.bezout && res.degree() == out.bezout;
    }
  if (!any) throw Error("plane_intersection: no admissible projection found");
  return out;
}

std::string to_string(LocusKind k) {
  switch (k) {
    case LocusKind::Empty:
      return "empty";
    case LocusKind::Finite:
      return "finite";
    case LocusKind::PositiveDimensional:
      return "positive-dimensional";
    case LocusKind::Unsupported:
      return "unsupported";
  }
  return "unknown";
}

FixedPointCount fixed_point_count(const std::vector<Poly>& equations, const ProjectiveMap& iota) {
  FixedPointCount out;
  for (const auto& space : fixed_locus(iota)) {
    EigenspaceCount ec;
    ec.eigenvalue = space.eigenvalue;
    ec.dim = space.dim();
    std::vector<Poly> restricted;
    for (const auto& e : equations) restricted.push_back(restrict_to_span(e, space.basis));
    auto eqs = independent(restricted);
    ec.equations = eqs.size();
    if (ec.dim == 1) {
      ec.kind = eqs.empty() ? LocusKind::Finite : LocusKind::Empty;
      ec.points = eqs.empty() ? 1 : 0;
    } else if (eqs.size() + 2 <= ec.dim) {
      ec.kind = LocusKind::PositiveDimensional;
    } else if (ec.dim == 2) {
      ec.points = common_roots_binary(eqs);
      ec.kind = ec.points > 0 ? LocusKind::Finite : LocusKind::Empty;
    } else if (ec.dim == 3 && eqs.size() == 2) {
      PlaneIntersection pi = plane_intersection(eqs[0], eqs[1]);
      if (pi.resultant_degree < 0) {
        ec.kind = LocusKind::PositiveDimensional;
      } else if (pi.transversal) {
        ec.kind = LocusKind::Finite;
        ec.points = pi.bezout;
      } else {
        ec.kind = LocusKind::Unsupported;
      }
    } else {
      ec.kind = LocusKind::Unsupported;
    }
    if (ec.kind == LocusKind::PositiveDimensional || ec.kind == LocusKind::Unsupported) out.finite = false;
    out.total += ec.points;
    out.spaces.push_back(ec);
  }
  return out;
}

std::size_t commutant_dim(const ProjectiveMap& sigma) {
  const CycMat& s = sigma.matrix();
  const std::size_t n = s.rows();
  CycMat sys(n * n, n * n);
  // Row (a, b) of X s - s X in terms of the unknowns X(i, j) at column i * n + j.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        sys(a * n + b, a * n + k) += s(k, b);
        sys(a * n + b, k * n + b) -= s(a, k);
      }
  return n * n - rank(sys);
}

int moduli_count(int params, int commutant, int redundancy) { return (params - 1) - (commutant - 1) - redundancy; }

int moduli_count(const std::vector<int>& params, int commutant, int redundancy) {
  int sum = 0;
  for (int p : params) sum += p - 1;
  return sum - (commutant - 1) - redundancy;
}

std::vector<Poly> K3Family::sample_polynomials() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < equations.size(); ++i)
    out.push_back(equations[i].polynomial(i < sample.size() ? sample[i] : std::vector<Cyc5>{}));
  return out;
}

std::vector<int> K3Family::params() const {
  std::vector<int> out;
  for (const auto& f : moduli_equations) {
    f.validate();
    Invariance inv = is_invariant_family(f);
    int deg = f.monomials.empty() ? 0 : f.degree_of(f.monomials.front());
    out.push_back(static_cast<int>(weight_space(f.weights, f.degrees, deg, inv.weight).size()));
  }
  return out;
}

namespace {

MonomialFamily family(std::string name, std::vector<int> weights, std::vector<Exponents> monomials,
                      std::vector<std::pair<std::size_t, std::size_t>> symmetry = {}, std::vector<int> degrees = {}) {
  MonomialFamily f;
  f.name = std::move(name);
  f.num_vars = weights.size();
  f.weights = std::move(weights);
  f.degrees = std::move(degrees);
  f.monomials = std::move(monomials);
  f.coefficient_symmetry = std::move(symmetry);
  f.validate();
  return f;
}

std::vector<Cyc5> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

K3Family family_p3(bool corrupt_monomial) {
  K3Family k;
  k.name = "P3";
  const std::vector<int> w{0, 3, 1, 2};
  std::vector<Exponents> monos{{3, 0, 1, 0}, {2, 2, 0, 0}, {1, 0, 0, 3}, {1, 1, 1, 1},
                               {0, 3, 0, 1}, {0, 1, 3, 0}, {0, 0, 2, 2}};
  if (corrupt_monomial) monos[0] = {3, 1, 0, 0};
  k.moduli_equations = {family("quartic", w, monos)};
  k.equations = {family("quartic (normalized)", w, monos, {{0, 4}, {2, 5}})};
  k.sample = {ints({1, 1, 1, 1, 1, 1, 1})};
  k.sigma = diagonal_map(w);
  k.moduli_sigma = k.sigma;
  k.iota = permutation_map({1, 0, 3, 2});
  k.claimed_fixed_points = 8;
  return k;
}

K3Family family_p4() {
  K3Family k;
  k.name = "P4";
  const std::vector<int> w{0, 1, 2, 3, 4};
  MonomialFamily q = family("Q", w, {{2, 0, 0, 0, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 1, 0}});
  MonomialFamily c = family("C", w,
                            {{3, 0, 0, 0, 0}, {1, 1, 0, 0, 1}, {1, 0, 1, 1, 0}, {0, 2, 0, 1, 0}, {0, 0, 1, 0, 2},
                             {0, 1, 2, 0, 0}, {0, 0, 0, 2, 1}},
                            {{3, 4}, {5, 6}});
  k.moduli_equations = {q, c};
  k.equations = {q, c};
  // Q: a, b, c; C: d, e, f, g = h, l = m.
  k.sample = {ints({1, 2, 3}), ints({1, -1, 2, 1, 1, -2, -2})};
  k.sigma = diagonal_map(w);
  k.moduli_sigma = k.sigma;
  k.iota = permutation_map({0, 4, 3, 2, 1});
  k.redundancy = 1;
  k.claimed_fixed_points = 8;
  return k;
}

K3Family family_p5() {
  K3Family k;
  k.name = "P5";
  const std::vector<int> w{0, 0, 1, 2, 3, 4};
  MonomialFamily q1 = family("Q1", w,
                             {{2, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1},
                              {0, 0, 0, 1, 1, 0}});
  MonomialFamily q2 = family("Q2", w, {{0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 2, 0}});
  MonomialFamily q3 = family("Q3", w, {{0, 1, 0, 0, 0, 1}, {0, 0, 1, 0, 1, 0}, {0, 0, 0, 2, 0, 0}});
  k.moduli_equations = {q1, q2, q3};
  k.equations = {q1, q2, q3};
  // Q1 = x0^2 + b x0x1 + x1^2 + d x2x5 + e x3x4 with (b, d, e) = (1, 2, 3).
  k.sample = {ints({1, 1, 1, 2, 3}), ints({1, 1, 1}), ints({1, 1, 1})};
  k.sigma = diagonal_map(w);
  k.moduli_sigma = k.sigma;
  k.iota = permutation_map({0, 1, 5, 4, 3, 2});
  k.claimed_fixed_points = 8;
  return k;
}

K3Family family_p2() {
  K3Family k;
  k.name = "P2";
  const std::vector<Exponents> sextic{{6, 0, 0}, {1, 5, 0}, {1, 0, 5}, {4, 1, 1}, {2, 2, 2}, {0, 3, 3}};
  k.moduli_equations = {family("C6", {0, 1, 4}, sextic)};
  k.moduli_sigma = diagonal_map({0, 1, 4});
  // u^2 - C6 on (u : x0 : x1 : x2), u of degree 3.
  std::vector<Exponents> cover{{2, 0, 0, 0}};
  for (const auto& m : sextic) cover.push_back({0, m[0], m[1], m[2]});
  k.equations = {family("double cover", {0, 0, 1, 4}, cover, {{2, 3}}, {3, 1, 1, 1})};
  k.sample = {ints({1, -1, -1, -1, -2, -3, -5})};
  k.sigma = diagonal_map({0, 0, 1, 4});
  k.iota = permutation_map({0, 1, 3, 2}, {-1, 1, 1, 1});
  return k;
}

}  // namespace latkit
