#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latkit/cyc5.hpp"
#include "latkit/poly.hpp"

namespace latkit {

/// A linear system of monomials sharing one (graded) degree.
struct MonomialFamily {
  std::string name;
  std::size_t num_vars = 0;
  std::vector<int> weights;       // exponent of w per variable, read mod 5
  std::vector<int> degrees;       // grading per variable; empty means all 1
  std::vector<Exponents> monomials;
  /// Pairs of monomial indices forced to share a coefficient.
  std::vector<std::pair<std::size_t, std::size_t>> coefficient_symmetry;

  int degree_of(const Exponents& e) const;
  /// Throws InputError on inconsistent lengths or mixed degrees.
  void validate() const;
  /// sum_i c_i m_i; coefficients default to 1.
  Poly polynomial(const std::vector<Cyc5>& coeffs = {}) const;
};

/// Sum of e_i w_i reduced to [0, 5).
int sigma_weight(const Exponents& m, const std::vector<int>& weights);

struct Invariance {
  bool invariant = false;
  int weight = 0;  // common weight when invariant, weight of the first monomial otherwise
  std::vector<int> monomial_weights;
};
Invariance is_invariant_family(const MonomialFamily& f);

/// Every monomial of the given graded degree whose weight is `weight`.
std::vector<Exponents> weight_space(const std::vector<int>& weights, const std::vector<int>& degrees, int degree,
                                    int weight);

/// Invertible square matrix over Q(w), acting on column coordinate vectors.
class ProjectiveMap {
 public:
  ProjectiveMap() = default;
  explicit ProjectiveMap(CycMat m);
  const CycMat& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  ProjectiveMap inverse() const;
  friend ProjectiveMap operator*(const ProjectiveMap& a, const ProjectiveMap& b) { return ProjectiveMap(a.m_ * b.m_); }

 private:
  CycMat m_;
};

/// diag(w^{w_0}, ..., w^{w_{n-1}}).
ProjectiveMap diagonal_map(const std::vector<int>& weights);
/// x_i -> sign_i * x_{perm[i]}: row i has sign_i in column perm[i].
ProjectiveMap permutation_map(const std::vector<std::size_t>& perm, const std::vector<int>& signs = {});

/// lambda with a = lambda * b, if one exists.
std::optional<Cyc5> pgl_ratio(const CycMat& a, const CycMat& b);
bool pgl_equal(const ProjectiveMap& a, const ProjectiveMap& b);
bool is_scalar(const CycMat& m);
bool dihedral_in_pgl(const ProjectiveMap& sigma, const ProjectiveMap& iota);

/// True iff P(M x) is a nonzero multiple of P.
bool preserves(const ProjectiveMap& map, const Poly& p);
/// True iff P o iota^{-1} is a nonzero multiple of Q.
bool swap_check(const ProjectiveMap& iota, const Poly& p, const Poly& q);

struct Eigenspace {
  Cyc5 eigenvalue;  // eigenvalue of the normalized involution (+1 or -1)
  CycMat basis;     // columns span the subspace
  std::size_t dim() const { return basis.cols(); }
};
/// Eigenspaces of iota rescaled so that iota^2 = 1. Throws InputError if
/// iota^2 is not scalar or the scalar has no square root of the form r w^k.
std::vector<Eigenspace> fixed_locus(const ProjectiveMap& iota);

/// Substitute x = s p + t q.
Poly restrict_to_line(const Poly& f, const std::vector<Cyc5>& p, const std::vector<Cyc5>& q);

struct LineRestriction {
  int degree = 0;
  bool nonzero = false;
  int roots_with_multiplicity = 0;
  int distinct_roots = 0;
};
LineRestriction restrict_and_count(const Poly& f, const std::vector<Cyc5>& p, const std::vector<Cyc5>& q);

struct PlaneIntersection {
  int bezout = 0;
  int resultant_degree = -1;  // -1 when the resultant vanishes identically
  int distinct = 0;           // distinct roots of the resultant
  bool transversal = false;   // resultant squarefree of full degree
};
/// Intersection of F = 0 and G = 0 in P^2 (both ternary forms), counted
/// through the Sylvester resultant after a projection chosen so that the
/// projection centre lies on neither curve.
PlaneIntersection plane_intersection(const Poly& f, const Poly& g);

/// Determinant of a small square matrix of polynomials (cofactor expansion).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

enum class LocusKind { Empty, Finite, PositiveDimensional, Unsupported };
std::string to_string(LocusKind k);

struct EigenspaceCount {
  Cyc5 eigenvalue;
  std::size_t dim = 0;
  std::size_t equations = 0;  // independent nonzero restrictions
  LocusKind kind = LocusKind::Empty;
  int points = 0;
};
struct FixedPointCount {
  std::vector<EigenspaceCount> spaces;
  bool finite = true;
  int total = 0;
};
/// Points of V(equations) fixed by iota, one eigenspace at a time.
FixedPointCount fixed_point_count(const std::vector<Poly>& equations, const ProjectiveMap& iota);

std::size_t commutant_dim(const ProjectiveMap& sigma);
int moduli_count(int params, int commutant, int redundancy);
int moduli_count(const std::vector<int>& params, int commutant, int redundancy);

/// One of the four polarized families with a diagonal order-5 action.
struct K3Family {
  std::string name;
  /// Defining equations in the coordinates acted on by sigma and iota.
  std::vector<MonomialFamily> equations;
  /// Sample member used for the involution checks (one vector per equation).
  std::vector<std::vector<Cyc5>> sample;
  ProjectiveMap sigma;
  ProjectiveMap iota;
  /// Parameter systems and symmetry used for the moduli count.
  std::vector<MonomialFamily> moduli_equations;
  ProjectiveMap moduli_sigma;
  int redundancy = 0;
  int claimed_moduli = 3;
  std::optional<int> claimed_fixed_points;

  std::vector<Poly> sample_polynomials() const;
  /// Weight-space dimension of each moduli equation.
  std::vector<int> params() const;
};

K3Family family_p3(bool corrupt_monomial = false);
K3Family family_p4();
K3Family family_p5();
K3Family family_p2();

}  // namespace latkit
