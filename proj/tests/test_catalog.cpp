#include <doctest.h>

#include "latkit/catalog.hpp"
#include "latkit/claims.hpp"
#include "latkit/error.hpp"
#include "latkit/fqf.hpp"
#include "latkit/shortvec.hpp"

using namespace latkit;

namespace {

const NamedConstruction& L() {
  static const NamedConstruction c = build_L();
  return c;
}

ZMat half(const ZMat& g) {
  ZMat h(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      REQUIRE(g(i, j) % 2 == 0);
      h(i, j) = g(i, j) / 2;
    }
  return h;
}

}  // namespace

TEST_CASE("standard Gram matrices") {
  IntegralLattice a = std_gram(RootFamily::A, 4, -2);
  CHECK(a.gram() == ZMat{{-4, 2, 0, 0}, {2, -4, 2, 0}, {0, 2, -4, 2}, {0, 0, 2, -4}});
  CHECK(a.det() == 80);
  CHECK(std_gram(RootFamily::U, 2, 1).gram() == ZMat{{0, 1}, {1, 0}});
  IntegralLattice e8 = std_gram(RootFamily::E8, 8, -1);
  CHECK(e8.det() == 1);
  CHECK(e8.is_even());
  CHECK(e8.signature() == Signature{0, 8});
}

TEST_CASE("the rank-16 overlattice") {
  const auto& c = L();
  CHECK(c.index == 256);
  CHECK(c.lattice->rank() == 16);
  CHECK(c.lattice->is_even());
  CHECK(c.lattice->is_negative_definite());
  CHECK(c.base.norm(c.base_vectors.at("mu")) == -4);
  CHECK(c.base.norm(c.base_vectors.at("nu")) == -4);
  CHECK(discriminant_group(*c.lattice).invariant_string() == "5,5,5,5");
  CHECK(c.lattice->det() * c.index * c.index == c.base.det());
  for (const auto& [name, v] : c.base_vectors) CHECK_NOTHROW(c.lattice_coords(v));
}

TEST_CASE("nu pairs integrally with its orbit and with the orbit of mu") {
  const auto& c = L();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const RatVec& ni = c.base_vectors.at("g^" + std::to_string(i) + "(nu)");
      CHECK(c.base.pair(ni, c.base_vectors.at("g^" + std::to_string(j) + "(nu)")).is_integer());
      CHECK(c.base.pair(ni, c.base_vectors.at("g^" + std::to_string(j) + "(mu)")).is_integer());
    }
}

TEST_CASE("the two E8(-2) copies") {
  const auto& c = L();
  for (const auto& names : {e_names(), f_names()}) {
    ZMat r = c.rows(names);
    IntegralLattice h = make_lattice(half(r * c.lattice->gram() * r.transpose()));
    CHECK(h.det() == 1);
    CHECK(h.is_even());
    CHECK(h.is_negative_definite());
  }
  auto all = e_names();
  for (const auto& f : f_names()) all.push_back(f);
  ZMat r = c.rows(all);
  CHECK(det(r * c.lattice->gram() * r.transpose()) == 625);
  CHECK(abs(det(r)) == 1);
}

TEST_CASE("h agrees with the reflection-style involution") {
  const auto& c = L();
  CHECK(to_rat(c.isometries.at("h").matrix()) == reflection_style_involution(c));
}

TEST_CASE("Nikulin lattice and M_D5") {
  NamedConstruction nik = build_nikulin();
  CHECK(nik.index == 2);
  CHECK(discriminant_group(*nik.lattice).invariant_string() == "2,2,2,2,2,2");
  CHECK(nik.lattice->is_even());

  NamedConstruction md5 = build_MD5();
  CHECK(md5.lattice->rank() == 16);
  FiniteQuadraticForm f = discriminant_group(*md5.lattice);
  CHECK(f.primary_string() == "(Z/2)^6 + (Z/5)^2");
  CHECK(f.invariant_string() == "2,2,2,2,10,10");
  CHECK(f.order() == 1600);
  CHECK(q_b_compatible(f));
}

TEST_CASE("faults break the constructions") {
  CHECK(known_faults().size() == 5);
  FaultSet nu;
  nu.active = {"nu-coord"};
  CHECK_THROWS_AS(build_L(nu), GlueError);
  FaultSet mu;
  mu.active = {"mu-coord"};
  CHECK_THROWS_AS(build_L(mu), GlueError);
  FaultSet h;
  h.active = {"h-action"};
  CHECK_THROWS_AS(build_L(h), Error);
  FaultSet nik;
  nik.active = {"nikulin-glue"};
  CHECK_THROWS_AS(build_nikulin(nik), GlueError);
}

TEST_CASE("repro filtering and faults") {
  ReproOptions opts;
  opts.tags = {"nikulin"};
  auto r = repro_all(opts);
  CHECK(r.size() == 3);
  CHECK(all_pass(r));

  opts.tags = {"dih10"};
  r = repro_all(opts);
  CHECK(r.size() >= 3);
  CHECK(all_pass(r));

  opts.tags = {"nu"};
  opts.faults.active = {"nu-coord"};
  r = repro_all(opts);
  CHECK_FALSE(all_pass(r));
  CHECK(r.front().computed.find("error:") == 0);

  ReproOptions bad;
  bad.tags = {"nope"};
  CHECK_THROWS_AS(repro_all(bad), InputError);
  ReproOptions bad_fault;
  bad_fault.faults.active = {"nope"};
  CHECK_THROWS_AS(repro_all(bad_fault), InputError);
}

TEST_CASE("quartic-monomial fault fails the family claims") {
  ReproOptions opts;
  opts.tags = {"p3"};
  CHECK(all_pass(repro_all(opts)));
  opts.faults.active = {"quartic-monomial"};
  CHECK_FALSE(all_pass(repro_all(opts)));
}

TEST_CASE("discrepancies are reported but do not fail the run") {
  ReproOptions opts;
  opts.tags = {"p5"};
  auto r = repro_all(opts);
  int discrepancies = 0;
  for (const auto& c : r)
    if (c.status() == ClaimStatus::Discrepancy) ++discrepancies;
  CHECK(discrepancies == 1);
  CHECK(all_pass(r));
}
