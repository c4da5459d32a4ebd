#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latkit/matrix.hpp"
#include "latkit/normal_form.hpp"

namespace latkit {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Nondegenerate integral lattice given by its Gram matrix in a fixed basis.
/// Coordinates of vectors are always taken with respect to that basis.
class IntegralLattice {
 public:
  IntegralLattice() = default;

  std::size_t rank() const { return gram_.rows(); }
  const ZMat& gram() const { return gram_; }
  const Mat& gram_q() const { return gram_q_; }
  const Integer& det() const { return det_; }
  Signature signature() const { return signature_; }

  bool is_even() const { return even_; }
  bool is_positive_definite() const { return signature_.positive == rank(); }
  bool is_negative_definite() const { return signature_.negative == rank(); }
  bool is_definite() const { return is_positive_definite() || is_negative_definite(); }

  Rat pair(std::span<const Rat> x, std::span<const Rat> y) const;
  Rat norm(std::span<const Rat> x) const { return pair(x, x); }
  Integer norm(std::span<const Integer> x) const;

  friend IntegralLattice make_lattice(const ZMat& gram);

 private:
  ZMat gram_;
  Mat gram_q_;
  Integer det_ = 1;
  Signature signature_;
  bool even_ = true;
};

/// Validates and wraps a Gram matrix: square, symmetric, integral and
/// nondegenerate. The signature is computed by exact congruence
/// diagonalization. Throws ConstructionError (or InputError for non-integer
/// entries).
IntegralLattice make_lattice(const ZMat& gram);
IntegralLattice make_lattice(const Mat& gram);

/// Signature of a symmetric rational matrix (zero eigenvalues are ignored).
Signature signature_of(const Mat& symmetric);

IntegralLattice direct_sum(std::span<const IntegralLattice> parts);
IntegralLattice direct_sum(std::initializer_list<IntegralLattice> parts);
IntegralLattice direct_power(const IntegralLattice& l, std::size_t copies);
/// Gram matrix multiplied by s; s must be nonzero.
IntegralLattice rescale(const IntegralLattice& l, long s);

/// Rational vector in the coordinates of a base lattice, used to extend the
/// lattice to an overlattice.
struct GlueVector {
  std::string name;
  RatVec coords;
};

struct Overlattice {
  IntegralLattice lattice;
  Integer index;
  /// Rows are the new basis vectors written in base-lattice coordinates.
  Mat basis;

  /// Base-lattice coordinates -> coordinates in the new basis.
  RatVec to_new_coords(std::span<const Rat> base_coords) const;
};

/// Adjoins glue vectors to l. Every glue vector must pair integrally with the
/// base basis and with every other glue vector, and have even self-pairing.
/// Throws GlueError naming the offending vector(s).
Overlattice overlattice(const IntegralLattice& l, std::span<const GlueVector> glue);

/// Lattice spanned by the rows (integer coordinates in l's basis).
/// Throws RankError when the rows are dependent.
IntegralLattice sublattice(const IntegralLattice& l, const ZMat& rows);

/// span_Q(rows) ∩ l, with the index of the row span in it.
Saturation saturation(const IntegralLattice& l, const ZMat& rows);

/// A primitive sublattice given by its basis; its Gram may be degenerate.
struct EmbeddedLattice {
  ZMat basis;  // rows in ambient coordinates
  ZMat gram;

  std::size_t rank() const { return basis.rows(); }
  bool nondegenerate() const { return det(gram) != 0; }
  /// Throws ConstructionError when the inherited form is degenerate.
  IntegralLattice lattice() const { return make_lattice(gram); }
};

EmbeddedLattice embed(const IntegralLattice& l, const ZMat& basis);

/// {v in l : v . s = 0 for every row s}, saturated.
EmbeddedLattice orthogonal_complement(const IntegralLattice& l, const ZMat& rows);

}  // namespace latkit
