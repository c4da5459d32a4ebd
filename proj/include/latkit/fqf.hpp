#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

/// Element of a finite abelian group written in its generators.
using GroupElement = std::vector<long>;

/// Discriminant form L*/L: invariant factors with lifts of the generators,
/// q-values in Q/2Z and the bilinear pairing b in Q/Z.
struct FiniteQuadraticForm {
  IntVec invariant_factors;            // each > 1, d1 | d2 | ...
  std::vector<RatVec> generator_lifts; // dual vectors in base coordinates
  bool has_q = true;                   // q is only defined for even lattices
  std::vector<Rat> q_values;           // in [0, 2)
  Mat b_matrix;                        // entries in [0, 1)

  std::size_t num_generators() const { return invariant_factors.size(); }
  Integer order() const;
  bool is_trivial() const { return invariant_factors.empty(); }

  Rat q(const GroupElement& x) const;
  Rat b(const GroupElement& x, const GroupElement& y) const;
  long element_order(const GroupElement& x) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;

  /// Every element, in lexicographic order of coefficient tuples.
  std::vector<GroupElement> elements() const;

  /// p -> exponents of the cyclic p-primary factors, e.g. {2: [1,1,1], 5: [1]}.
  std::map<Integer, std::vector<unsigned>> primary_decomposition() const;
  /// Text form of the primary decomposition, e.g. "(Z/2)^6 + (Z/5)^2".
  std::string primary_string() const;
  /// Text form of the invariant factors, e.g. "2,2,10".
  std::string invariant_string() const;
};

/// Throws ConstructionError for degenerate lattices (cannot happen for a
/// validated IntegralLattice).
FiniteQuadraticForm discriminant_group(const IntegralLattice& l);

/// Images of the generators of F1, as elements of F2.
struct FqfIsomorphism {
  std::vector<GroupElement> images;
};

/// Backtracking search for an isometry F1 -> F2. Returns nullopt when none
/// exists (the search is exhaustive, so absence is certified).
std::optional<FqfIsomorphism> fqf_isomorphic(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2);

/// Checks that the map defined by iso is a bijective isometry.
bool verify_fqf_isomorphism(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                            const FqfIsomorphism& iso);

/// Property check: q(x+y) - q(x) - q(y) == 2 b(x, y) mod 2 on all generator
/// pairs.
bool q_b_compatible(const FiniteQuadraticForm& f);

}  // namespace latkit
