#include "latkit/isometry.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace latkit {
namespace {

bool matrix_less(const ZMat& a, const ZMat& b) { return a.data() < b.data(); }

}  // namespace

Isometry make_isometry(std::shared_ptr<const IntegralLattice> l, ZMat m) {
  if (!l) throw InputError("isometry without a lattice");
  if (m.rows() != l->rank() || m.cols() != l->rank()) throw IsometryError("isometry: matrix size does not match rank");
  ZMat defect = m.transpose() * l->gram() * m - l->gram();
  if (!defect.is_zero_matrix()) {
    std::ostringstream os;
    os << "matrix does not preserve the Gram form; defect M^T G M - G =\n" << defect;
    throw IsometryError(os.str());
  }
  Integer d = det(m);
  if (d != 1 && d != -1) throw IsometryError("isometry: determinant is not +/-1");
  Isometry iso;
  iso.lattice_ = std::move(l);
  iso.matrix_ = std::move(m);
  return iso;
}

Isometry make_isometry(const IntegralLattice& l, ZMat m) {
  return make_isometry(std::make_shared<const IntegralLattice>(l), std::move(m));
}

Isometry make_isometry(std::shared_ptr<const IntegralLattice> l, const Mat& m) {
  if (!is_integral(m)) throw IsometryError("isometry: matrix is not integral in this basis");
  return make_isometry(std::move(l), to_integer(m));
}

Isometry Isometry::operator*(const Isometry& other) const {
  Isometry r;
  r.lattice_ = lattice_;
  r.matrix_ = matrix_ * other.matrix_;
  return r;
}

Isometry Isometry::inverse() const {
  Isometry r;
  r.lattice_ = lattice_;
  r.matrix_ = to_integer(latkit::inverse(to_rat(matrix_)), "isometry inverse");
  return r;
}

Isometry Isometry::pow(long k) const {
  Isometry base = k < 0 ? inverse() : *this;
  Isometry r;
  r.lattice_ = lattice_;
  r.matrix_ = power(base.matrix_, static_cast<unsigned>(k < 0 ? -k : k));
  return r;
}

long order(const Isometry& iso, long cap) {
  const ZMat id = ZMat::identity(iso.matrix().rows());
  ZMat p = iso.matrix();
  for (long k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * iso.matrix();
  }
  throw CapExceeded("order exceeds cap " + std::to_string(cap));
}

bool disc_action_trivial(const Isometry& iso) {
  FiniteQuadraticForm f = discriminant_group(iso.lattice());
  Mat m = to_rat(iso.matrix());
  for (const auto& lift : f.generator_lifts) {
    RatVec image = mat_vec(m, lift);
    for (std::size_t i = 0; i < lift.size(); ++i)
      if (!(image[i] - lift[i]).is_integer()) return false;
  }
  return true;
}

bool GroupClosure::contains(const Isometry& g) const {
  return std::binary_search(elements.begin(), elements.end(), g,
                            [](const Isometry& a, const Isometry& b) { return matrix_less(a.matrix(), b.matrix()); });
}

bool GroupClosure::certify_closed() const {
  if (elements.empty()) return false;
  bool has_identity = std::any_of(elements.begin(), elements.end(), [](const Isometry& g) { return g.is_identity(); });
  if (!has_identity) return false;
  for (const auto& a : elements) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elements)
      if (!contains(a * b)) return false;
  }
  return true;
}

GroupClosure group_closure(const std::vector<Isometry>& gens, std::size_t cap) {
  if (gens.empty()) throw InputError("group_closure: no generators");
  for (const auto& g : gens)
    if (g.lattice().gram() != gens.front().lattice().gram())
      throw InputError("group_closure: generators act on different lattices");

  auto less = [](const Isometry& a, const Isometry& b) { return matrix_less(a.matrix(), b.matrix()); };
  std::vector<Isometry> seen;  // kept sorted
  auto insert = [&](const Isometry& g) {
    auto it = std::lower_bound(seen.begin(), seen.end(), g, less);
    if (it != seen.end() && *it == g) return false;
    seen.insert(it, g);
    if (seen.size() > cap) throw CapExceeded("group closure exceeds cap " + std::to_string(cap));
    return true;
  };

  Isometry identity = gens.front().pow(0);
  std::deque<Isometry> frontier;
  insert(identity);
  frontier.push_back(identity);
  while (!frontier.empty()) {
    Isometry cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Isometry next = g * cur;
      if (insert(next)) frontier.push_back(next);
    }
  }
  return GroupClosure{std::move(seen)};
}

bool dihedral_relations(const Isometry& rotation, const Isometry& reflection, long n) {
  try {
    if (order(rotation, n) != n) return false;
    if (order(reflection, 2) != 2) return false;
  } catch (const CapExceeded&) {
    return false;
  }
  return (reflection * rotation * reflection.inverse()) == rotation.inverse();
}

EmbeddedLattice invariant_sublattice(const GroupClosure& g) {
  const IntegralLattice& l = g.elements.front().lattice();
  const std::size_t n = l.rank();
  ZMat stacked(0, n);
  for (const auto& e : g.elements) stacked = stacked.stacked(e.matrix() - ZMat::identity(n));
  return embed(l, integer_kernel(stacked));
}

EmbeddedLattice coinvariant_sublattice(const GroupClosure& g) {
  const IntegralLattice& l = g.elements.front().lattice();
  EmbeddedLattice inv = invariant_sublattice(g);
  return orthogonal_complement(l, inv.basis);
}

bool acts_as_minus_one(const Isometry& iso, const ZMat& rows) {
  ZMat image = iso.matrix() * rows.transpose();
  return image == -rows.transpose();
}

bool acts_as_identity(const Isometry& iso, const ZMat& rows) {
  ZMat image = iso.matrix() * rows.transpose();
  return image == rows.transpose();
}

Mat conjugate_to_basis(const ZMat& base_matrix, const Mat& basis) {
  Mat bt = basis.transpose();
  return inverse(bt) * to_rat(base_matrix) * bt;
}

}  // namespace latkit
