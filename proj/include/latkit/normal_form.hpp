#pragma once

#include "latkit/matrix.hpp"

namespace latkit {

/// Smith normal form D = U * M * V with U, V unimodular and the nonzero
/// diagonal of D nonnegative with d1 | d2 | ... .
struct SmithForm {
  ZMat u;
  ZMat d;
  ZMat v;

  /// Diagonal entries d_i for i < min(rows, cols).
  IntVec diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

// Pivot rule: smallest absolute value in the active block, ties broken by
// lowest (row, col).
SmithForm snf(const ZMat& m);
/// Throws InputError if m has a non-integer entry.
SmithForm snf(const Mat& m);

/// Row Hermite normal form of an integer matrix: upper triangular echelon
/// shape, positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
ZMat hnf(const ZMat& m);

/// Z-span of the rows of a rational matrix, returned in the Hermite normal
/// form of (d * m) divided back by d, where d is the common denominator.
Mat hnf_rowspan(const Mat& m);

/// Rows span {x in Z^n : m x = 0}; the result is saturated in Z^n.
ZMat integer_kernel(const ZMat& m);

struct Saturation {
  ZMat basis;      // HNF basis of span_Q(rows) ∩ Z^n
  Integer index;   // [saturation : span(rows)]
};

/// Primitive closure of the row span of s inside Z^n. Throws RankError when
/// the rows are dependent.
Saturation saturate_rows(const ZMat& s);

}  // namespace latkit
