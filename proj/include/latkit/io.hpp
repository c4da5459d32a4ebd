#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latkit/k3fam.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

/// Lattice file:
///   rank n
///   n rows of n entries (integers or p/q)
///   glue v_1 ... v_n        (optional, any number; coordinates in the base)
/// '#' starts a comment. Errors are InputError with "line N:" prefixes.
struct LatticeFile {
  Mat gram;
  std::vector<GlueVector> glue;

  /// The lattice itself (Gram entries must be integers).
  IntegralLattice base() const;
  /// base() glued by every glue row, or base() if there are none.
  IntegralLattice effective() const;
};

LatticeFile parse_lattice(std::istream& in);
LatticeFile read_lattice_file(const std::string& path);

/// Family file:
///   vars n
///   weights w_0 ... w_{n-1}
///   degrees d_0 ... d_{n-1}      (optional grading, default all 1)
///   equation NAME                (starts a new equation; optional for one)
///   mono e_0 ... e_{n-1}         (one line per monomial)
///   coeffs c_1 ... c_k           (optional sample coefficients over Q(w))
///   map NAME                     (followed by n rows of Q(w) tokens)
///   redundancy r
///   expect moduli K | expect fixed-points K
struct FamilyFile {
  std::size_t num_vars = 0;
  std::vector<int> weights;
  std::vector<int> degrees;
  std::vector<MonomialFamily> equations;
  std::vector<std::vector<Cyc5>> coeffs;  // per equation; empty means all 1
  std::map<std::string, ProjectiveMap> maps;
  int redundancy = 0;
  std::optional<int> expect_moduli;
  std::optional<int> expect_fixed_points;

  std::vector<Poly> sample_polynomials() const;
};

FamilyFile parse_family(std::istream& in);
FamilyFile read_family_file(const std::string& path);

}  // namespace latkit
