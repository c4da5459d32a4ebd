#include <doctest.h>

#include <random>

#include "latkit/catalog.hpp"
#include "latkit/error.hpp"
#include "latkit/isometry.hpp"

using namespace latkit;

namespace {

const NamedConstruction& L() {
  static const NamedConstruction c = build_L();
  return c;
}

}  // namespace

TEST_CASE("make_isometry validates the form") {
  IntegralLattice a4 = std_gram(RootFamily::A, 4, 1);
  CHECK(make_isometry(a4, ZMat::identity(4)).is_identity());
  CHECK_THROWS_AS(make_isometry(a4, ZMat{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), IsometryError);
  CHECK_THROWS_AS(make_isometry(a4, ZMat::identity(3)), Error);

  Isometry gamma = make_isometry(std_gram(RootFamily::A, 4, -2), a4_rotation());
  CHECK(order(gamma) == 5);

  IntegralLattice u = std_gram(RootFamily::U, 2, 1);
  Isometry swap = make_isometry(u, ZMat{{0, 1}, {1, 0}});
  CHECK(order(swap) == 2);
  CHECK(order(make_isometry(u, ZMat::identity(2))) == 1);
}

TEST_CASE("order cap is enforced") {
  Isometry gamma = make_isometry(std_gram(RootFamily::A, 4, 1), a4_rotation());
  CHECK_THROWS_AS(order(gamma, 3), CapExceeded);
  CHECK_THROWS_AS(group_closure({gamma}, 4), CapExceeded);
}

TEST_CASE("action on the discriminant group") {
  IntegralLattice a4 = std_gram(RootFamily::A, 4, 1);
  CHECK(disc_action_trivial(make_isometry(a4, ZMat::identity(4))));
  CHECK_FALSE(disc_action_trivial(make_isometry(a4, -ZMat::identity(4))));
  CHECK(disc_action_trivial(make_isometry(a4, a4_rotation())));
  CHECK(disc_action_trivial(L().isometries.at("g")));
}

TEST_CASE("disc_action_trivial is invariant under a change of basis") {
  const Isometry& g = L().isometries.at("g");
  const Isometry& h = L().isometries.at("h");
  const std::size_t n = 16;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    ZMat p = ZMat::identity(n);
    for (int k = 0; k < 20; ++k) {
      std::size_t a = rng() % n, b = rng() % n;
      if (a == b) continue;
      long f = static_cast<long>(rng() % 5) - 2;
      for (std::size_t j = 0; j < n; ++j) p(a, j) += f * p(b, j);
    }
    auto l2 = std::make_shared<const IntegralLattice>(make_lattice(p * L().lattice->gram() * p.transpose()));
    Isometry g2 = make_isometry(l2, conjugate_to_basis(g.matrix(), to_rat(p)));
    Isometry h2 = make_isometry(l2, conjugate_to_basis(h.matrix(), to_rat(p)));
    CHECK(disc_action_trivial(g2) == disc_action_trivial(g));
    CHECK(disc_action_trivial(h2) == disc_action_trivial(h));
    CHECK(order(g2) == 5);
  }
}

TEST_CASE("group closures and dihedral relations") {
  IntegralLattice a4 = std_gram(RootFamily::A, 4, 1);
  Isometry id = make_isometry(a4, ZMat::identity(4));
  CHECK(group_closure({id}).order() == 1);

  const Isometry& g = L().isometries.at("g");
  const Isometry& h = L().isometries.at("h");
  CHECK(order(h) == 2);
  CHECK(group_closure({g}).order() == 5);
  GroupClosure d = group_closure({g, h});
  CHECK(d.order() == 10);
  CHECK(d.certify_closed());
  CHECK(d.contains(g.pow(3) * h));
  CHECK(dihedral_relations(g, h, 5));
  CHECK_FALSE(dihedral_relations(g, g, 5));
  CHECK((h * g * h.inverse() * g).is_identity());
  CHECK(g.pow(-1) == g.inverse());

  Isometry ga = make_isometry(a4, a4_rotation());
  Isometry ha = make_isometry(a4, a4_involution());
  CHECK(dihedral_relations(ga, ha, 5));
}

TEST_CASE("invariant and coinvariant sublattices") {
  IntegralLattice a4 = std_gram(RootFamily::A, 4, 1);
  GroupClosure trivial = group_closure({make_isometry(a4, ZMat::identity(4))});
  CHECK(invariant_sublattice(trivial).rank() == 4);
  CHECK(coinvariant_sublattice(trivial).rank() == 0);

  GroupClosure cg = group_closure({L().isometries.at("g")});
  CHECK(invariant_sublattice(cg).rank() == 0);
  CHECK(coinvariant_sublattice(cg).rank() == 16);

  GroupClosure ch = group_closure({L().isometries.at("h")});
  EmbeddedLattice inv = invariant_sublattice(ch);
  EmbeddedLattice coinv = coinvariant_sublattice(ch);
  CHECK(inv.rank() == 8);
  CHECK(inv.rank() + coinv.rank() == 16);
  CHECK((inv.basis * L().lattice->gram() * coinv.basis.transpose()).is_zero_matrix());
  EmbeddedLattice comp = orthogonal_complement(*L().lattice, L().rows(e_names()));
  CHECK(hnf(inv.basis) == hnf(comp.basis));
  CHECK(acts_as_identity(L().isometries.at("h"), comp.basis));
}

TEST_CASE("minus-one actions") {
  IntegralLattice a4 = std_gram(RootFamily::A, 4, 1);
  CHECK(acts_as_minus_one(make_isometry(a4, -ZMat::identity(4)), ZMat::identity(4)));
  CHECK(acts_as_minus_one(L().isometries.at("h"), L().rows(e_names())));
  CHECK(acts_as_minus_one(L().isometries.at("g2h"), L().rows(f_names())));
  CHECK_FALSE(acts_as_minus_one(L().isometries.at("h"), L().rows(f_names())));
}

TEST_CASE("every element of <g, h> preserves the glue") {
  const auto& c = L();
  GroupClosure d = group_closure({c.isometries.at("g"), c.isometries.at("h")});
  REQUIRE(d.order() == 10);
  const Mat bt = c.basis.transpose();
  const Mat bt_inv = inverse(bt);
  for (const auto& m : d.elements) {
    // Back to base coordinates: A = B^T M B^-T.
    Mat a = bt * to_rat(m.matrix()) * bt_inv;
    for (int i = 0; i < 4; ++i)
      for (const std::string v : {"mu", "nu"}) {
        const RatVec& x = c.base_vectors.at("g^" + std::to_string(i) + "(" + v + ")");
        RatVec y = mat_vec(a, x);
        CHECK_NOTHROW(c.lattice_coords(y));
        CHECK(c.base.norm(y) == c.base.norm(x));
      }
  }
}
