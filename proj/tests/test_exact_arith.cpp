#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwreath/laurent.hpp"
#include "qwreath/matrix.hpp"
#include "qwreath/ratfunc.hpp"

#include <random>

using namespace qwreath;

namespace {

const RatFunc kV = RatFunc::v();
const RatFunc kVinv = RatFunc::v(-1);

Laurent rand_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(-4, 4), nterms(0, 4);
  Laurent f;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) f += Laurent::term(coef(rng), expo(rng));
  return f;
}

RatFunc rand_ratfunc(std::mt19937& rng) {
  Laurent den = rand_laurent(rng);
  if (den.is_zero()) den = Laurent(1);
  return RatFunc(rand_laurent(rng), den);
}

}  // namespace

TEST_CASE("laurent basics") {
  Laurent f = Laurent::v() + Laurent::v(-1);
  CHECK(f.str() == "v + v^-1");
  CHECK((f * f).str() == "v^2 + 2 + v^-2");
  CHECK(f - f == Laurent());
  CHECK(Laurent(3).str() == "3");
  CHECK((-Laurent::v(2)).str() == "-v^2");
  Laurent g = Laurent::from_pairs({{4, 1}, {2, 2}, {0, -2}, {-2, 2}, {-4, 1}});
  CHECK(g.str() == "v^4 + 2*v^2 - 2 + 2*v^-2 + v^-4");
}

TEST_CASE("field ops examples") {
  RatFunc a = kV - kVinv;
  CHECK(a + kVinv == kV);
  CHECK((kV + kVinv) * (kV - kVinv) == RatFunc::v(2) - RatFunc::v(-2));
  RatFunc r = RatFunc(1) / (RatFunc::v(2) + RatFunc(1));
  CHECK(r.den() == Laurent::v(2) + Laurent(1));
  CHECK(r.num() == Laurent(1));
  CHECK_THROWS_AS(a / RatFunc(0), DivisionByZero);
}

TEST_CASE("fraction normalization is canonical") {
  // (v^2 - 1)/(v - 1) reduces to v + 1.
  RatFunc x(Laurent::v(2) - Laurent(1), Laurent::v() - Laurent(1));
  CHECK(x == RatFunc(Laurent::v() + Laurent(1)));
  // Denominators are polynomials with nonzero constant term, positive lead.
  RatFunc y(Laurent(1), Laurent::v(3) - Laurent::v());
  CHECK(y.den().coeff(0) != 0);
  CHECK(y.den().leading_coeff() > 0);
  CHECK(y * (RatFunc::v(3) - RatFunc::v()) == RatFunc(1));
  // Contents are coprime.
  RatFunc z(Laurent(6), Laurent(4));
  CHECK(z.num() == Laurent(3));
  CHECK(z.den() == Laurent(2));
}

TEST_CASE("laurent_sqrt examples") {
  CHECK(laurent_sqrt(Laurent::v(2) + Laurent(2) + Laurent::v(-2)) == Laurent::v() + Laurent::v(-1));
  Laurent q1 = Laurent::v(4) + Laurent::term(2, 2) + Laurent(1);  // (q+1)^2
  CHECK(laurent_sqrt(q1) == Laurent::v(2) + Laurent(1));
  CHECK_THROWS_AS(laurent_sqrt(Laurent::v(2) + Laurent(1)), NotAPerfectSquare);
  CHECK_THROWS_AS(laurent_sqrt(Laurent::v(3) + Laurent::v(1)), NotAPerfectSquare);
  CHECK_THROWS_AS(laurent_sqrt(Laurent::term(2, 2)), NotAPerfectSquare);
}

TEST_CASE("laurent_sqrt round trips on random squares") {
  std::mt19937 rng(7);
  int tried = 0;
  while (tried < 50) {
    Laurent f = rand_laurent(rng), g = rand_laurent(rng);
    Laurent sq = f * f * g * g;
    if (sq.is_zero()) continue;
    ++tried;
    Laurent root = laurent_sqrt(sq);
    CHECK(root * root == sq);
    CHECK(root.leading_coeff() > 0);
  }
}

TEST_CASE("bar involution") {
  RatFunc a = kV - kVinv;
  CHECK(bar_involution(a) == kVinv - kV);
  CHECK(bar_involution(RatFunc::v(2) + RatFunc(1)) == RatFunc::v(-2) + RatFunc(1));
  CHECK(bar_involution(RatFunc(3)) == RatFunc(3));
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    RatFunc f = rand_ratfunc(rng);
    CHECK(bar_involution(bar_involution(f)) == f);
  }
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    RatFunc a = rand_ratfunc(rng), b = rand_ratfunc(rng), c = rand_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
  }
}

TEST_CASE("matrix rank nullspace det inverse") {
  Matrix m(2, 2);
  m.at(0, 0) = kV;
  m.at(0, 1) = RatFunc(1);
  m.at(1, 0) = RatFunc(1);
  m.at(1, 1) = kVinv;
  CHECK(m.det().is_zero());
  CHECK(m.rank() == 1);
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  auto img = m.apply(ns[0]);
  CHECK(img[0].is_zero());
  CHECK(img[1].is_zero());

  Matrix a(2, 2);
  a.at(0, 0) = kV;
  a.at(0, 1) = RatFunc(1);
  a.at(1, 0) = RatFunc(2);
  a.at(1, 1) = kV - kVinv;
  REQUIRE(a.is_invertible());
  CHECK(a * a.inverse() == Matrix::identity(2));
  CHECK(a.inverse() * a == Matrix::identity(2));

  Matrix b = kron(a, Matrix::identity(2));
  CHECK(b.rows() == 4);
  CHECK(b.det() == a.det() * a.det());
}
