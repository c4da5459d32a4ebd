#include <doctest.h>

#include "latkit/catalog.hpp"
#include "latkit/error.hpp"
#include "latkit/fqf.hpp"
#include "latkit/lattice.hpp"

using namespace latkit;

namespace {

IntegralLattice a4(long s) { return std_gram(RootFamily::A, 4, s); }
IntegralLattice u() { return std_gram(RootFamily::U, 2, 1); }

void check_form_invariants(const IntegralLattice& l) {
  FiniteQuadraticForm f = discriminant_group(l);
  CHECK(f.order() == abs(l.det()));
  CHECK(q_b_compatible(f));
  for (const auto& q : f.q_values) CHECK((q >= 0 && q < 2));
}

}  // namespace

TEST_CASE("make_lattice examples") {
  IntegralLattice m2 = make_lattice(ZMat{{-2}});
  CHECK(m2.rank() == 1);
  CHECK(m2.signature() == Signature{0, 1});
  CHECK(u().signature() == Signature{1, 1});
  CHECK(u().gram() == ZMat{{0, 1}, {1, 0}});
  CHECK(a4(-2).signature() == Signature{0, 4});
  CHECK(a4(-2).det() == 80);
  CHECK(a4(-2).gram()(0, 0) == -4);
  CHECK(a4(-2).gram()(0, 1) == 2);
  IntegralLattice e8 = std_gram(RootFamily::E8, 8, -1);
  CHECK(e8.det() == 1);
  CHECK(e8.is_even());
  CHECK(e8.signature() == Signature{0, 8});
}

TEST_CASE("make_lattice rejects bad Gram matrices") {
  CHECK_THROWS_AS(make_lattice(ZMat{{1, 2}, {3, 4}}), ConstructionError);
  CHECK_THROWS_AS(make_lattice(ZMat{{1, 1}, {1, 1}}), ConstructionError);
  CHECK_THROWS_AS(make_lattice(ZMat{{1, 2, 3}}), ConstructionError);
  CHECK_THROWS_AS(make_lattice(Mat{{Rat(1, 2)}}), InputError);
  CHECK_FALSE(make_lattice(ZMat{{1}}).is_even());
}

TEST_CASE("direct sums and rescaling") {
  IntegralLattice s = direct_power(a4(-2), 4);
  CHECK(s.rank() == 16);
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 5, 4);
  expected <<= 16;
  CHECK(s.det() == expected);
  CHECK(rescale(std_gram(RootFamily::E8, 8, -1), 2).det() == 256);
  CHECK(rescale(std_gram(RootFamily::E8, 8, -1), 2).gram() == std_gram(RootFamily::E8, 8, -2).gram());
  CHECK(direct_sum({a4(1)}).gram() == a4(1).gram());
  CHECK(direct_sum({a4(1), u()}).signature() == Signature{5, 1});
  CHECK_THROWS(rescale(a4(1), 0));
}

TEST_CASE("discriminant groups") {
  FiniteQuadraticForm f = discriminant_group(a4(1));
  CHECK(f.invariant_factors == IntVec{5});
  CHECK(f.q_values == std::vector<Rat>{Rat(4, 5)});
  CHECK(discriminant_group(std_gram(RootFamily::E8, 8, -2)).invariant_string() == "2,2,2,2,2,2,2,2");
  CHECK(discriminant_group(std_gram(RootFamily::E8, 8, 1)).is_trivial());
  FiniteQuadraticForm m = discriminant_group(direct_sum({a4(-1), std_gram(RootFamily::A1, 1, 2), std_gram(RootFamily::A1, 1, -1)}));
  CHECK(m.primary_string() == "(Z/2) + (Z/2^2) + (Z/5)");
  CHECK(m.invariant_string() == "2,20");
  check_form_invariants(a4(-2));
  check_form_invariants(direct_power(u(), 2));
  check_form_invariants(std_gram(RootFamily::E8, 8, -2));
  check_form_invariants(direct_sum({a4(3), std_gram(RootFamily::A1, 1, -1)}));
}

TEST_CASE("discriminant group element arithmetic") {
  FiniteQuadraticForm f = discriminant_group(direct_power(std_gram(RootFamily::A1, 1, 2), 2));
  REQUIRE(f.invariant_factors == IntVec{4, 4});
  auto all = f.elements();
  CHECK(all.size() == 16);
  GroupElement x{1, 3};
  CHECK(f.element_order(x) == 4);
  CHECK(f.add(x, x) == GroupElement{2, 2});
  CHECK(f.q(GroupElement{0, 0}) == 0);
}

TEST_CASE("overlattice examples") {
  IntegralLattice base = direct_power(std_gram(RootFamily::A1, 1, -1), 8);
  GlueVector half{"half", RatVec(8, Rat(1, 2))};
  Overlattice nik = overlattice(base, std::vector<GlueVector>{half});
  CHECK(nik.index == 2);
  CHECK(nik.lattice.det() * nik.index * nik.index == base.det());
  CHECK(nik.lattice.is_even());
  for (std::size_t i = 0; i < 8; ++i) CHECK(nik.lattice.gram()(i, i) % 2 == 0);

  GlueVector integral{"int", {1, 0, 0, 0, 0, 0, 0, -1}};
  Overlattice same = overlattice(base, std::vector<GlueVector>{integral});
  CHECK(same.index == 1);
  CHECK(same.lattice.det() == base.det());
  CHECK(same.basis == to_rat(ZMat::identity(8)));

  auto back = nik.to_new_coords(half.coords);
  CHECK(std::all_of(back.begin(), back.end(), [](const Rat& r) { return r.is_integer(); }));
}

TEST_CASE("overlattice glue errors") {
  IntegralLattice base = direct_power(std_gram(RootFamily::A1, 1, -1), 8);
  RatVec bad(8, Rat(1, 2));
  bad[7] = 0;
  CHECK_THROWS_AS(overlattice(base, std::vector<GlueVector>{{"bad", bad}}), GlueError);
  RatVec quarter(8, Rat(0));
  quarter[0] = Rat(1, 4);
  CHECK_THROWS_AS(overlattice(base, std::vector<GlueVector>{{"quarter", quarter}}), GlueError);
  // Integral pairings but odd self-pairing.
  IntegralLattice a1x4 = direct_power(std_gram(RootFamily::A1, 1, 1), 4);
  CHECK_THROWS_AS(overlattice(a1x4, std::vector<GlueVector>{{"odd", {Rat(1, 2), Rat(1, 2), 0, 0}}}), GlueError);
  // Even self-pairing: a valid gluing of A1(2)^4.
  IntegralLattice a1x4_2 = direct_power(std_gram(RootFamily::A1, 1, 2), 4);
  CHECK(overlattice(a1x4_2, std::vector<GlueVector>{{"even", RatVec(4, Rat(1, 2))}}).index == 2);
  try {
    overlattice(base, std::vector<GlueVector>{{"bad", bad}});
  } catch (const GlueError& e) {
    CHECK(std::string(e.what()).find("bad") != std::string::npos);
  }
}

TEST_CASE("sublattice, saturation and complements") {
  IntegralLattice l = a4(1);
  CHECK(sublattice(l, ZMat::identity(4)).gram() == l.gram());
  CHECK_THROWS_AS(sublattice(l, ZMat{{1, 0, 0, 0}, {2, 0, 0, 0}}), RankError);

  Saturation s1 = saturation(l, ZMat{{1, 1, 0, 0}});
  CHECK(s1.index == 1);
  Saturation s2 = saturation(l, ZMat{{0, 2, 0, 0}});
  CHECK(s2.basis == ZMat{{0, 1, 0, 0}});
  CHECK(s2.index == 2);
  CHECK(saturation(l, s2.basis).basis == s2.basis);

  IntegralLattice uu = direct_power(u(), 2);
  EmbeddedLattice c = orthogonal_complement(uu, ZMat{{1, 0, 0, 0}});
  CHECK(c.rank() == 3);
  CHECK((c.basis * uu.gram() * ZMat{{1}, {0}, {0}, {0}}).is_zero_matrix());
  CHECK(hnf(c.basis.stacked(ZMat{{0, 0, 1, 0}, {0, 0, 0, 1}})) == hnf(c.basis));
  CHECK_FALSE(c.nondegenerate());
  CHECK(orthogonal_complement(l, ZMat::identity(4)).rank() == 0);

  EmbeddedLattice d = orthogonal_complement(l, ZMat{{1, 0, 0, 0}});
  CHECK(d.rank() == 3);
  CHECK((d.basis * l.gram() * ZMat{{1}, {0}, {0}, {0}}).is_zero_matrix());
  CHECK(d.nondegenerate());
}

TEST_CASE("fqf isomorphism") {
  FiniteQuadraticForm f = discriminant_group(a4(-2));
  auto self = fqf_isomorphic(f, f);
  REQUIRE(self.has_value());
  CHECK(verify_fqf_isomorphism(f, f, *self));

  FiniteQuadraticForm minus = discriminant_group(std_gram(RootFamily::A1, 1, -1));
  FiniteQuadraticForm plus = discriminant_group(std_gram(RootFamily::A1, 1, 1));
  CHECK(minus.q_values == std::vector<Rat>{Rat(3, 2)});
  CHECK(plus.q_values == std::vector<Rat>{Rat(1, 2)});
  CHECK_FALSE(fqf_isomorphic(minus, plus).has_value());

  FiniteQuadraticForm nik = discriminant_group(*build_nikulin().lattice);
  FiniteQuadraticForm u2 = discriminant_group(direct_power(std_gram(RootFamily::U, 2, 2), 3));
  auto iso = fqf_isomorphic(nik, u2);
  REQUIRE(iso.has_value());
  CHECK(verify_fqf_isomorphism(nik, u2, *iso));
  // Same group (Z/2)^6, different q-values.
  CHECK_FALSE(fqf_isomorphic(nik, discriminant_group(direct_power(std_gram(RootFamily::A1, 1, -1), 6))).has_value());
}
