#include "latkit/catalog.hpp"

#include <utility>

namespace latkit {
namespace {

ZMat block_diagonal(const ZMat& block, std::size_t copies) {
  const std::size_t k = block.rows();
  ZMat m(k * copies, k * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(c * k + i, c * k + j) = block(i, j);
  return m;
}

// Index of a_{copy,root} (both 1-based) in the copy-major basis of A4(-2)^4.
std::size_t a_index(std::size_t copy, std::size_t root) { return 4 * (copy - 1) + (root - 1); }

RatVec half_sum(std::size_t n, std::initializer_list<std::size_t> positions) {
  RatVec v(n, Rat(0));
  for (auto p : positions) v[p] += Rat(1, 2);
  return v;
}

RatVec image_of(const ZMat& m, const RatVec& v) { return mat_vec(to_rat(m), v); }

RatVec add(RatVec a, const RatVec& b, const Rat& scale = Rat(1)) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

}  // namespace

IntegralLattice std_gram(RootFamily family, std::size_t n, long scale) {
  if (scale == 0) throw InputError("std_gram: scale must be nonzero");
  ZMat g;
  switch (family) {
    case RootFamily::A:
    case RootFamily::A1: {
      if (family == RootFamily::A1) n = 1;
      if (n < 1) throw InputError("std_gram: A_n needs n >= 1");
      g = ZMat(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 2;
        if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
      }
      break;
    }
    case RootFamily::E8: {
      g = ZMat(8, 8);
      for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
      // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
      const std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (auto [a, b] : edges) g(a, b) = g(b, a) = -1;
      break;
    }
    case RootFamily::U:
      g = ZMat{{0, 1}, {1, 0}};
      break;
    default:
      throw InputError("std_gram: unsupported family");
  }
  return make_lattice(g * Integer(scale));
}

ZMat a4_rotation() {
  return ZMat{{0, 0, 0, -1},
              {1, 0, 0, -1},
              {0, 1, 0, -1},
              {0, 0, 1, -1}};
}

ZMat a4_involution() {
  return ZMat{{-1, 1, 0, 0},
              {0, 1, 0, 0},
              {0, 1, 0, -1},
              {0, 1, -1, 0}};
}

const std::set<std::string>& known_faults() {
  static const std::set<std::string> faults = {"nu-coord", "mu-coord", "h-action", "nikulin-glue", "quartic-monomial"};
  return faults;
}

ZMat NamedConstruction::rows(const std::vector<std::string>& names) const {
  ZMat m(names.size(), lattice->rank());
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto it = vectors.find(names[i]);
    if (it == vectors.end()) throw InputError(name + ": no vector named " + names[i]);
    for (std::size_t j = 0; j < lattice->rank(); ++j) m(i, j) = it->second[j];
  }
  return m;
}

ZMat NamedConstruction::rows(std::initializer_list<std::string> names) const {
  return rows(std::vector<std::string>(names));
}

IntVec NamedConstruction::lattice_coords(const RatVec& base_coords) const {
  Mat row(1, base_coords.size());
  for (std::size_t j = 0; j < base_coords.size(); ++j) row(0, j) = base_coords[j];
  Mat c = row * inverse(basis);
  return to_integer(c, name + " membership").row_vector(0);
}

std::vector<std::string> e_names() {
  std::vector<std::string> v;
  for (int i = 1; i <= 8; ++i) v.push_back("e" + std::to_string(i));
  return v;
}

std::vector<std::string> f_names() {
  std::vector<std::string> v;
  for (int i = 9; i <= 16; ++i) v.push_back("f" + std::to_string(i));
  return v;
}

NamedConstruction build_L(const FaultSet& faults) {
  NamedConstruction c;
  c.name = "L";
  c.base = direct_power(std_gram(RootFamily::A, 4, -2), 4);
  const std::size_t n = c.base.rank();

  const ZMat g_base = block_diagonal(a4_rotation(), 4);
  ZMat inv_block = a4_involution();
  if (faults.has("h-action")) inv_block(0, 0) = 1;
  const ZMat h_base = block_diagonal(inv_block, 4);
  c.base_maps["g"] = g_base;
  c.base_maps["h"] = h_base;

  RatVec mu = half_sum(n, {a_index(1, 1), a_index(2, 1), a_index(3, 1), a_index(4, 1)});
  RatVec nu = half_sum(n, {a_index(2, 1), a_index(3, 3), a_index(3, 4), a_index(4, 1), a_index(4, 3), a_index(4, 4)});
  if (faults.has("mu-coord")) mu[a_index(1, 2)] += Rat(1, 2);
  if (faults.has("nu-coord")) nu[a_index(3, 3)] = Rat(1, 4);

  std::vector<RatVec> g_mu{mu}, g_nu{nu};
  for (int i = 1; i < 4; ++i) {
    g_mu.push_back(image_of(g_base, g_mu.back()));
    g_nu.push_back(image_of(g_base, g_nu.back()));
  }
  std::vector<GlueVector> glue;
  for (int i = 0; i < 4; ++i) {
    std::string k = std::to_string(i);
    c.base_vectors["g^" + k + "(mu)"] = g_mu[static_cast<std::size_t>(i)];
    c.base_vectors["g^" + k + "(nu)"] = g_nu[static_cast<std::size_t>(i)];
    glue.push_back({"g^" + k + "(mu)", g_mu[static_cast<std::size_t>(i)]});
  }
  for (int i = 0; i < 4; ++i) glue.push_back({"g^" + std::to_string(i) + "(nu)", g_nu[static_cast<std::size_t>(i)]});
  c.base_vectors["mu"] = mu;
  c.base_vectors["nu"] = nu;

  Overlattice ov = overlattice(c.base, glue);
  c.lattice = std::make_shared<const IntegralLattice>(ov.lattice);
  c.basis = ov.basis;
  c.index = ov.index;

  auto unit = [n](std::initializer_list<std::size_t> positions) {
    RatVec v(n, Rat(0));
    for (auto p : positions) v[p] += 1;
    return v;
  };
  // e1..e8 in base coordinates.
  c.base_vectors["e1"] = mu;
  c.base_vectors["e2"] = add(g_mu[2], g_mu[3]);
  c.base_vectors["e3"] = nu;
  c.base_vectors["e4"] = add(add(add(add(mu, g_mu[2]), g_mu[3]), g_nu[2], Rat(-1)), g_nu[3], Rat(-1));
  c.base_vectors["e5"] = unit({a_index(1, 1)});
  c.base_vectors["e6"] = unit({a_index(1, 3), a_index(1, 4)});
  c.base_vectors["e7"] = unit({a_index(2, 1)});
  c.base_vectors["e8"] = unit({a_index(2, 3), a_index(2, 4)});
  for (const auto& [name, v] : c.base_vectors) c.vectors[name] = c.lattice_coords(v);

  Isometry g = make_isometry(c.lattice, conjugate_to_basis(g_base, c.basis));
  Isometry h = make_isometry(c.lattice, conjugate_to_basis(h_base, c.basis));
  c.isometries.emplace("g", g);
  c.isometries.emplace("h", h);
  c.isometries.emplace("g2h", g.pow(2) * h);

  const auto es = e_names();
  const auto fs = f_names();
  for (std::size_t i = 0; i < 8; ++i) {
    const IntVec& e = c.vectors[es[i]];
    IntVec f(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) f[r] += g.matrix()(r, k) * e[k];
    c.vectors[fs[i]] = f;
  }
  return c;
}

Mat reflection_style_involution(const NamedConstruction& l) {
  ZMat e = l.rows(e_names());
  EmbeddedLattice comp = orthogonal_complement(*l.lattice, e);
  Mat p = to_rat(e.stacked(comp.basis));
  std::vector<Rat> signs;
  for (std::size_t i = 0; i < p.rows(); ++i) signs.push_back(i < e.rows() ? Rat(-1) : Rat(1));
  Mat pt = p.transpose();
  return pt * Mat::diagonal(signs) * inverse(pt);
}

NamedConstruction build_nikulin(const FaultSet& faults) {
  NamedConstruction c;
  c.name = "Nikulin";
  c.base = direct_power(std_gram(RootFamily::A1, 1, -1), 8);
  RatVec half(8, Rat(1, 2));
  if (faults.has("nikulin-glue")) half[7] = 0;
  c.base_vectors["half-sum"] = half;
  std::vector<GlueVector> glue{{"half-sum", half}};
  Overlattice ov = overlattice(c.base, glue);
  c.lattice = std::make_shared<const IntegralLattice>(ov.lattice);
  c.basis = ov.basis;
  c.index = ov.index;
  c.vectors["half-sum"] = c.lattice_coords(half);
  return c;
}

NamedConstruction build_MD5(const FaultSet& faults) {
  NamedConstruction nik = build_nikulin(faults);
  NamedConstruction c;
  c.name = "M_D5";
  IntegralLattice a4 = std_gram(RootFamily::A, 4, -1);
  c.base = direct_sum({a4, a4, *nik.lattice});
  c.lattice = std::make_shared<const IntegralLattice>(c.base);
  c.basis = Mat::identity(c.base.rank());
  c.index = 1;
  return c;
}

NamedConstruction build_MD5_glued(const FaultSet& faults) {
  NamedConstruction c;
  c.name = "M_D5 (glued)";
  IntegralLattice a4 = std_gram(RootFamily::A, 4, -1);
  IntegralLattice a1 = direct_power(std_gram(RootFamily::A1, 1, -1), 8);
  c.base = direct_sum({a4, a4, a1});
  RatVec half(c.base.rank(), Rat(0));
  for (std::size_t i = 8; i < 16; ++i) half[i] = Rat(1, 2);
  if (faults.has("nikulin-glue")) half[15] = 0;
  std::vector<GlueVector> glue{{"half-sum", half}};
  Overlattice ov = overlattice(c.base, glue);
  c.lattice = std::make_shared<const IntegralLattice>(ov.lattice);
  c.basis = ov.basis;
  c.index = ov.index;
  return c;
}

}  // namespace latkit
