#include <doctest.h>

#include "latkit/cyc5.hpp"
#include "latkit/error.hpp"
#include "latkit/normal_form.hpp"
#include "latkit/poly.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace latkit;

namespace {
ZMat a4_cartan() { return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}; }
}  // namespace

TEST_CASE("Rat parsing and normalization") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-3") == Rat(-3));
  CHECK(Rat::parse("+1/-2") == Rat(-1, 2));
  CHECK(Rat(Integer(4), Integer(-6)).den() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(-1, 3).mod(2) == Rat(5, 3));
  CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rat::parse("abc"), InputError);
  CHECK_THROWS_AS(Rat(0).inverse(), ArithmeticError);
}

TEST_CASE("snf examples") {
  CHECK(snf(ZMat::identity(2)).d == ZMat::identity(2));
  ZMat d42{{4, 0}, {0, 2}};
  CHECK(snf(d42).diagonal() == IntVec{2, 4});
  SmithForm s = snf(a4_cartan());
  CHECK(s.diagonal() == IntVec{1, 1, 1, 5});
  CHECK(s.u * a4_cartan() * s.v == s.d);
  CHECK(oracle::invariant_factors_by_minors(a4_cartan()) == IntVec{1, 1, 1, 5});
}

TEST_CASE("snf of rectangular and rational inputs") {
  ZMat m{{2, 4, 4}, {-6, 6, 12}};
  SmithForm s = snf(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.diagonal() == oracle::invariant_factors_by_minors(m));
  CHECK(snf(Mat{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}).diagonal() == IntVec{1, 2});
  CHECK_THROWS_AS(snf(Mat{{Rat(1, 2)}}), InputError);
}

TEST_CASE("hnf examples") {
  CHECK(hnf(ZMat::identity(2)) == ZMat::identity(2));
  ZMat rows{{2, 0}, {3, 0}};
  CHECK(hnf(rows) == ZMat{{1, 0}});
  ZMat m{{0, 3, 1}, {2, 4, 6}};
  ZMat h = hnf(m);
  CHECK(h(0, 0) > 0);
  CHECK(hnf(h) == h);
}

TEST_CASE("hnf_rowspan of Z^16 plus a half-sum has index 2") {
  Mat rows = to_rat(ZMat::identity(16));
  Mat mu(1, 16);
  for (std::size_t j : {0U, 4U, 8U, 12U}) mu(0, j) = Rat(1, 2);
  Mat span = hnf_rowspan(rows.stacked(mu));
  REQUIRE(span.rows() == 16);
  CHECK(det(span) == Rat(1, 2));
  CHECK(hnf_rowspan(span) == span);
}

TEST_CASE("integer kernel and saturation") {
  ZMat m{{1, 2, 3}};
  ZMat k = integer_kernel(m);
  CHECK(k.rows() == 2);
  CHECK((m * k.transpose()).is_zero_matrix());
  Saturation s = saturate_rows(ZMat{{2, 0, 0}});
  CHECK(s.basis == ZMat{{1, 0, 0}});
  CHECK(s.index == 2);
  CHECK(saturate_rows(ZMat{{1, 1, 0}}).index == 1);
  CHECK_THROWS_AS(saturate_rows(ZMat{{1, 1}, {2, 2}}), RankError);
}

TEST_CASE("determinants agree with Leibniz") {
  CHECK(det(a4_cartan()) == 5);
  CHECK(oracle::det_leibniz(a4_cartan()) == 5);
  ZMat m{{0, 1, 2}, {3, 4, 5}, {6, 7, 9}};
  CHECK(det(m) == oracle::det_leibniz(m));
  CHECK(det(to_rat(m)) == Rat(oracle::det_leibniz(m)));
}

TEST_CASE("cyc5 examples") {
  const Cyc5 w = Cyc5::omega_pow(1);
  CHECK(w * Cyc5::omega_pow(4) == Cyc5(1));
  CHECK(Cyc5(1) + w + w.pow(2) + w.pow(3) + w.pow(4) == Cyc5(0));
  Cyc5 p = (Cyc5(1) - w) * (Cyc5(1) - w.pow(2)) * (Cyc5(1) - w.pow(3)) * (Cyc5(1) - w.pow(4));
  CHECK(p == Cyc5(5));
  CHECK((Cyc5(1) - w).norm() == Rat(5));
  CHECK(cyc_mul(w, w) == Cyc5::omega_pow(2));
  CHECK(cyc_pow(w, -1) == Cyc5::omega_pow(4));
  CHECK(cyc_inv(Cyc5(2)) == Cyc5(Rat(1, 2)));
  CHECK(Cyc5::omega_pow(4) == Cyc5(-1, -1, -1, -1));
  CHECK_THROWS_AS(Cyc5(0).inverse(), ArithmeticError);
}

TEST_CASE("cyc5 parse and print") {
  CHECK(Cyc5::parse("1/2+3*w-w^3") == Cyc5(Rat(1, 2), 3, 0, -1));
  CHECK(Cyc5::parse("2*w^4") == Cyc5(-2, -2, -2, -2));
  CHECK(Cyc5::parse("-w^2").str() == "-w^2");
  CHECK(Cyc5(0).str() == "0");
  CHECK_THROWS_AS(Cyc5::parse(""), InputError);
  CHECK_THROWS_AS(Cyc5::parse("1+"), InputError);
  CHECK_THROWS_AS(Cyc5::parse("x"), InputError);
}

TEST_CASE("cyc5 matrices over the field") {
  const Cyc5 w = Cyc5::omega_pow(1);
  CycMat m{{w, Cyc5(1)}, {Cyc5(0), w.pow(2)}};
  CycMat inv = inverse(m);
  CHECK(m * inv == CycMat::identity(2));
  CHECK(field_det(m) == w.pow(3));
  CycMat sing{{Cyc5(1), w}, {w, w.pow(2)}};
  CHECK(rank(sing) == 1);
  CycMat ns = nullspace(sing);
  REQUIRE(ns.rows() == 1);
  CHECK((sing * ns.transpose()).is_zero_matrix());
}

TEST_CASE("poly arithmetic and composition agree with evaluation") {
  Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  Poly f = x * x * y + (z * Cyc5::omega_pow(2)) * z * z - x * y * z;
  CHECK(f.degree() == 3);
  CHECK(f.is_homogeneous());
  CHECK(!(f + x).is_homogeneous());
  CHECK(f.coeff({2, 1, 0}) == Cyc5(1));
  CHECK((f - f).is_zero());
  CHECK(f.pow(2) == f * f);

  const Cyc5 w = Cyc5::omega_pow(1);
  CycMat a{{Cyc5(1), w, Cyc5(0)}, {Cyc5(0), Cyc5(2), Cyc5(-1)}, {w.pow(3), Cyc5(0), Cyc5(1)}};
  Poly g = f.compose(a);
  std::vector<oracle::cplx> pt{{0.3, -0.2}, {1.1, 0.4}, {-0.7, 0.5}};
  std::vector<oracle::cplx> apt(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) apt[i] += oracle::eval(a(i, j)) * pt[j];
  CHECK(std::abs(oracle::eval(g, pt) - oracle::eval(f, apt)) < 1e-9);

  auto ratio = (f * w).scalar_ratio(f);
  REQUIRE(ratio.has_value());
  CHECK(*ratio == w);
  CHECK_FALSE((f + x * y * z).scalar_ratio(f).has_value());
}

TEST_CASE("univariate gcd and binary roots") {
  // (t - 1)^2 (t + 2) and (t - 1)(t + 3)
  UPoly a({Cyc5(2), Cyc5(-3), Cyc5(0), Cyc5(1)});
  UPoly b({Cyc5(-3), Cyc5(2), Cyc5(1)});
  UPoly g = gcd(a, b);
  CHECK(g.degree() == 1);
  CHECK(g.monic().coeffs() == std::vector<Cyc5>{Cyc5(-1), Cyc5(1)});
  // s^2 t^2 (s - t): roots 0 and infinity (double) and 1.
  Poly s = Poly::variable(2, 0), t = Poly::variable(2, 1);
  Poly form = s * s * t * t * s - s * s * t * t * t;
  CHECK(distinct_roots_binary(form) == 3);
  CHECK(distinct_roots_binary(s.pow(4) + t.pow(4)) == 4);
}

TEST_CASE("property: snf/hnf round-trip on random matrices") {
  props::Report r = props::snf_hnf_roundtrip(200, 11);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: cyc5 field axioms") {
  props::Report r = props::cyc5_axioms(200, 12);
  INFO(r.first_failure);
  CHECK(r.ok());
}
