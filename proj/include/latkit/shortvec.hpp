#pragma once

#include <map>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

struct ShortVector {
  IntVec coords;  // in the lattice basis, first nonzero entry positive
  Integer norm;   // positive convention
};

/// All nonzero vectors of norm <= bound, one per +/- pair.
struct ShortVectorReport {
  Integer bound;
  /// True when the input was negative definite and the enumeration ran on
  /// the negated Gram matrix. Norms are always reported as positive numbers.
  bool negated = false;
  std::vector<ShortVector> vectors;     // lexicographic by coords
  std::map<Integer, std::size_t> counts_by_norm;  // norm -> number of +/- pairs

  std::size_t pair_count() const { return vectors.size(); }
};

struct EnumerationOptions {
  /// Independent subtrees of the outermost coordinate are split across this
  /// many worker threads; the merged report is identical to a serial run.
  unsigned threads = 1;
  /// Pairwise-reduce the basis before enumerating.
  bool reduce_basis = true;
};

/// Exhaustive enumeration with an exact rational Cholesky decomposition; no
/// floating point enters any decision. Throws InputError for indefinite
/// lattices.
ShortVectorReport short_vectors(const IntegralLattice& l, const Integer& bound, const EnumerationOptions& opts = {});

/// Smallest positive norm (positive convention), found by doubling the bound
/// starting at 2.
Integer minimum(const IntegralLattice& l, const EnumerationOptions& opts = {});

/// Pairwise (Gauss-style) size reduction of a positive definite Gram matrix.
/// Returns the unimodular transform T whose rows are the new basis vectors.
ZMat pairwise_reduce(const ZMat& positive_gram);

}  // namespace latkit
