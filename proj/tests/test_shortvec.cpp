#include <doctest.h>

#include "latkit/catalog.hpp"
#include "latkit/error.hpp"
#include "latkit/shortvec.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace latkit;

TEST_CASE("shortvec examples") {
  IntegralLattice a1 = std_gram(RootFamily::A1, 1, 1);
  ShortVectorReport r1 = short_vectors(a1, 2);
  REQUIRE(r1.pair_count() == 1);
  CHECK(r1.vectors[0].coords == IntVec{1});
  CHECK(r1.vectors[0].norm == 2);

  IntegralLattice a4 = std_gram(RootFamily::A, 4, 1);
  ShortVectorReport r4 = short_vectors(a4, 2);
  CHECK(r4.pair_count() == 10);
  CHECK(r4.counts_by_norm.at(2) == 10);
  CHECK(oracle::short_vectors_box(a4.gram(), 2).size() == 10);

  CHECK(short_vectors(a4, 0).pair_count() == 0);
  CHECK(short_vectors(a4, 1).pair_count() == 0);
}

TEST_CASE("shortvec ordering and sign convention") {
  IntegralLattice a4 = std_gram(RootFamily::A, 4, 1);
  ShortVectorReport r = short_vectors(a4, 6);
  for (std::size_t i = 0; i < r.vectors.size(); ++i) {
    const auto& c = r.vectors[i].coords;
    auto first = std::find_if(c.begin(), c.end(), [](const Integer& z) { return z != 0; });
    REQUIRE(first != c.end());
    CHECK(*first > 0);
    CHECK(a4.norm(c) == r.vectors[i].norm);
    if (i) CHECK(r.vectors[i - 1].coords < c);
  }
  // Even lattice: no odd norms.
  for (const auto& [norm, count] : r.counts_by_norm) CHECK(norm % 2 == 0);
}

TEST_CASE("negative definite input is negated") {
  IntegralLattice a4m = std_gram(RootFamily::A, 4, -1);
  ShortVectorReport r = short_vectors(a4m, 2);
  CHECK(r.negated);
  CHECK(r.pair_count() == 10);
  CHECK(r.vectors.front().norm == 2);
}

TEST_CASE("indefinite input is rejected") {
  CHECK_THROWS_AS(short_vectors(std_gram(RootFamily::U, 2, 1), 2), InputError);
  CHECK_THROWS_AS(minimum(std_gram(RootFamily::U, 2, 1)), InputError);
}

TEST_CASE("minimum examples") {
  CHECK(minimum(std_gram(RootFamily::E8, 8, 1)) == 2);
  CHECK(minimum(std_gram(RootFamily::E8, 8, -2)) == 4);
  CHECK(minimum(rescale(std_gram(RootFamily::A1, 1, 1), 3)) == 6);
  CHECK(minimum(make_lattice(ZMat{{7, 3}, {3, 5}})) == 5);
}

TEST_CASE("E8 root count") {
  ShortVectorReport r = short_vectors(std_gram(RootFamily::E8, 8, 1), 2);
  CHECK(r.pair_count() == 120);
}

TEST_CASE("pairwise reduction is unimodular and keeps the form") {
  ZMat g{{10, 7, 3}, {7, 6, 2}, {3, 2, 5}};
  ZMat t = pairwise_reduce(g);
  CHECK(abs(det(t)) == 1);
  ZMat gr = t * g * t.transpose();
  CHECK(det(gr) == det(g));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(2 * abs(gr(i, j)) <= std::max(gr(i, i), gr(j, j)));
}

TEST_CASE("threaded enumeration matches serial on L") {
  NamedConstruction c = build_L();
  IntegralLattice lm = rescale(*c.lattice, -1);
  EnumerationOptions serial;
  EnumerationOptions threaded;
  threaded.threads = 4;
  ShortVectorReport a = short_vectors(lm, 3, serial);
  ShortVectorReport b = short_vectors(lm, 3, threaded);
  CHECK(a.pair_count() == 0);
  CHECK(b.pair_count() == 0);
}

TEST_CASE("property: shortvec agrees with box enumeration") {
  props::Report r = props::shortvec_vs_oracle(50, 21);
  INFO(r.first_failure);
  CHECK(r.ok());
}
