#pragma once

#include <memory>
#include <vector>

#include "latkit/fqf.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

/// Integer matrix acting on column coordinate vectors of a lattice and
/// preserving its Gram form: M^T G M = G.
class Isometry {
 public:
  Isometry() = default;

  const IntegralLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const IntegralLattice>& lattice_ptr() const { return lattice_; }
  const ZMat& matrix() const { return matrix_; }

  /// Composition (this ∘ other): apply other first.
  Isometry operator*(const Isometry& other) const;
  Isometry inverse() const;
  Isometry pow(long k) const;
  bool is_identity() const { return matrix_ == ZMat::identity(matrix_.rows()); }

  friend bool operator==(const Isometry& a, const Isometry& b) { return a.matrix_ == b.matrix_; }

  friend Isometry make_isometry(std::shared_ptr<const IntegralLattice> l, ZMat m);

 private:
  std::shared_ptr<const IntegralLattice> lattice_;
  ZMat matrix_;
};

/// Validates M. Throws IsometryError carrying the Gram defect M^T G M - G.
Isometry make_isometry(std::shared_ptr<const IntegralLattice> l, ZMat m);
Isometry make_isometry(const IntegralLattice& l, ZMat m);
Isometry make_isometry(std::shared_ptr<const IntegralLattice> l, const Mat& m);

/// Least k >= 1 with M^k = I. Throws CapExceeded past cap.
long order(const Isometry& iso, long cap = 1000);

/// True iff M x - x is integral for every generator lift x of L*/L.
bool disc_action_trivial(const Isometry& iso);

struct GroupClosure {
  std::vector<Isometry> elements;  // sorted by matrix entries, identity included
  std::size_t order() const { return elements.size(); }
  bool contains(const Isometry& g) const;
  /// Re-checks closure under products and inverses.
  bool certify_closed() const;
};

/// Breadth-first closure of the generators. Throws CapExceeded past cap.
GroupClosure group_closure(const std::vector<Isometry>& gens, std::size_t cap = 10000);

/// Presentation check for a dihedral group of order 2n:
/// r^n = 1, s^2 = 1, s r s^-1 = r^-1, and r, s of exact orders n, 2.
bool dihedral_relations(const Isometry& rotation, const Isometry& reflection, long n);

/// Fixed sublattice {v : M v = v for all M in G}, saturated.
EmbeddedLattice invariant_sublattice(const GroupClosure& g);

/// Orthogonal complement of the invariant sublattice.
EmbeddedLattice coinvariant_sublattice(const GroupClosure& g);

/// True iff M s = -s for every row s.
bool acts_as_minus_one(const Isometry& iso, const ZMat& rows);
/// True iff M s = s for every row s.
bool acts_as_identity(const Isometry& iso, const ZMat& rows);

/// Matrix of an isometry of the base lattice written in the basis of an
/// overlattice (rows = new basis in base coordinates): B^-T M B^T. The result
/// is rational; it extends to the overlattice iff it is integral.
Mat conjugate_to_basis(const ZMat& base_matrix, const Mat& basis);

}  // namespace latkit
