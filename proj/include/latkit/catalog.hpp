#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "latkit/isometry.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

enum class RootFamily { A, E8, U, A1 };

/// Cartan-convention Gram matrix (2 on the diagonal, -1 on edges of the
/// Dynkin diagram) scaled by `scale`. U is the hyperbolic plane.
IntegralLattice std_gram(RootFamily family, std::size_t n, long scale);

/// Cyclic rotation alpha_i -> alpha_{i+1} of A_4, with
/// alpha_5 = -(alpha_1 + ... + alpha_4), as a column-action matrix.
ZMat a4_rotation();

/// Involution of A_4: a1 -> -a1, a2 -> -a5, a3 -> -a4, a4 -> -a3.
ZMat a4_involution();

/// Named deliberate corruptions used as negative controls.
struct FaultSet {
  std::set<std::string> active;
  bool has(const std::string& id) const { return active.count(id) != 0; }
};

/// Fault ids recognised by the builders.
const std::set<std::string>& known_faults();

struct NamedConstruction {
  std::string name;
  std::shared_ptr<const IntegralLattice> lattice;
  IntegralLattice base;
  Mat basis;      // rows: lattice basis in base coordinates
  Integer index;  // [lattice : base]

  std::map<std::string, RatVec> base_vectors;  // base coordinates
  std::map<std::string, IntVec> vectors;       // lattice coordinates
  std::map<std::string, ZMat> base_maps;       // column action on the base
  std::map<std::string, Isometry> isometries;  // column action on the lattice

  /// Rows of the named vectors, in order, as lattice coordinates.
  ZMat rows(std::initializer_list<std::string> names) const;
  ZMat rows(const std::vector<std::string>& names) const;
  /// Base coordinates -> lattice coordinates (throws if not in the lattice).
  IntVec lattice_coords(const RatVec& base_coords) const;
};

/// Names "e1".."e8" and "f9".."f16".
std::vector<std::string> e_names();
std::vector<std::string> f_names();

/// The rank-16 overlattice of A4(-2)^4 glued by the g-orbits of mu and nu,
/// with g, h conjugated into its basis and the vectors e1..e8, f9..f16.
/// Throws GlueError / IsometryError if any integrality check fails.
NamedConstruction build_L(const FaultSet& faults = {});

/// The involution acting as -1 on the e-span and +1 on its orthogonal
/// complement, built directly from those two sublattices.
Mat reflection_style_involution(const NamedConstruction& l);

/// A1(-1)^8 glued by (e1 + ... + e8)/2.
NamedConstruction build_nikulin(const FaultSet& faults = {});

/// A4(-1)^2 ⊕ Nikulin lattice.
NamedConstruction build_MD5(const FaultSet& faults = {});

/// A4(-1)^2 ⊕ A1(-1)^8 glued by the Nikulin half-sum on the A1 part.
NamedConstruction build_MD5_glued(const FaultSet& faults = {});

}  // namespace latkit
