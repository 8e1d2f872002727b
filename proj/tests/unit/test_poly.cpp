#include <doctest.h>

#include "nhk/poly.hpp"
#include "nhk/suites.hpp"

using namespace nhk;

TEST_CASE("ring axioms on random sparse polynomials") {
  Rng rng(7);
  EvalContext ctx;  // only used for nvars via random_poly; fake a rank-2 setup
  RootDatum d = RootDatum::build("A2");
  ctx = generic_context(d);
  for (int iter = 0; iter < 500; ++iter) {
    SparsePoly a = random_poly(ctx, rng, 4, 3);
    SparsePoly b = random_poly(ctx, rng, 4, 3);
    SparsePoly c = random_poly(ctx, rng, 4, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("substitution") {
  // e^pi on A1: x -> x - h.
  SparsePoly x = SparsePoly::variable(2, 0);
  IntMat id1 = IntMat::identity(1);
  SparsePoly moved = x.substitute_linear(id1, {-1}, std::nullopt);
  CHECK(moved == SparsePoly::linear(2, {1}, Rational(-1)));

  SparsePoly seven = SparsePoly::constant(2, 7);
  CHECK(seven.substitute_linear(id1, {-1}, std::nullopt) == seven);

  // x^2 is even under x -> -x.
  IntMat neg(1);
  neg.at(0, 0) = -1;
  SparsePoly x2 = x * x;
  CHECK(x2.substitute_linear(neg, {0}, std::nullopt) == x2);

  // Identity substitution is the identity.
  RootDatum d = RootDatum::build("B2");
  EvalContext ctx = generic_context(d);
  Rng rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    SparsePoly p = random_poly(ctx, rng, 5, 4);
    CHECK(p.substitute_linear(IntMat::identity(2), {0, 0}, std::nullopt) == p);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  RootDatum d = RootDatum::build("A2");
  EvalContext ctx = generic_context(d);
  Rng rng(13);
  IntMat m(2);
  m.at(0, 0) = 0; m.at(0, 1) = -1; m.at(1, 0) = 1; m.at(1, 1) = 1;
  std::vector<long long> shift{2, -1};
  for (int iter = 0; iter < 50; ++iter) {
    SparsePoly a = random_poly(ctx, rng, 3, 3);
    SparsePoly b = random_poly(ctx, rng, 3, 3);
    CHECK((a * b).substitute_linear(m, shift, std::nullopt) ==
          a.substitute_linear(m, shift, std::nullopt) *
              b.substitute_linear(m, shift, std::nullopt));
    CHECK((a + b).substitute_linear(m, shift, std::nullopt) ==
          a.substitute_linear(m, shift, std::nullopt) +
              b.substitute_linear(m, shift, std::nullopt));
  }
}

TEST_CASE("canonical printing: descending graded-lex with h last") {
  // 3/2 x1^2 h - x2
  SparsePoly p(3);
  p.add_term(Monomial{{2, 0, 1}}, Rational(3) / 2);
  p.add_term(Monomial{{0, 1, 0}}, -1);
  CHECK(p.str() == "3/2*x1^2*h - x2");
  CHECK(SparsePoly(3).str() == "0");
  SparsePoly c = SparsePoly::constant(3, Rational(-5) / 3);
  CHECK(c.str() == "-5/3");
}

TEST_CASE("text format parses back") {
  CHECK(SparsePoly::parse(3, "3/2*x1^2*h - x2").str() == "3/2*x1^2*h - x2");
  CHECK(SparsePoly::parse(2, "0").is_zero());
  CHECK(SparsePoly::parse(2, "x1 + x1").str() == "2*x1");
  CHECK(SparsePoly::parse(2, "-x1^3").str() == "-x1^3");
  CHECK(SparsePoly::parse(2, "h^2*5").str() == "5*h^2");
  CHECK_THROWS_AS(SparsePoly::parse(2, "x3"), std::invalid_argument);
  CHECK_THROWS_AS(SparsePoly::parse(2, "1 + + 2"), std::invalid_argument);
  CHECK_THROWS_AS(SparsePoly::parse(2, "y"), std::invalid_argument);

  RootDatum d = RootDatum::build("A2");
  EvalContext ctx = generic_context(d);
  Rng rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    SparsePoly p = random_poly(ctx, rng, 5, 4);
    CHECK(SparsePoly::parse(3, p.str()) == p);
  }
}

TEST_CASE("homogeneous decomposition and degrees") {
  SparsePoly p = SparsePoly::parse(2, "x1^2 + 3*x1*h + 2*x1 - 7");
  auto parts = p.homogeneous_parts();
  CHECK(parts.size() == 3);
  CHECK(parts.at(2) == SparsePoly::parse(2, "x1^2 + 3*x1*h"));
  CHECK(parts.at(1) == SparsePoly::parse(2, "2*x1"));
  CHECK(parts.at(0) == SparsePoly::parse(2, "-7"));
  CHECK(p.degree() == 2);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(SparsePoly(2).degree() == -1);
}

TEST_CASE("specialize h") {
  SparsePoly p = SparsePoly::parse(2, "x1*h + h^2 - x1");
  CHECK(p.specialize_hbar(1) == SparsePoly::parse(2, "1"));
  CHECK(p.specialize_hbar(0) == SparsePoly::parse(2, "-x1"));
  CHECK(p.specialize_hbar(Rational(1) / 2) ==
        SparsePoly::parse(2, "1/2*x1 + 1/4 - x1"));
}

TEST_CASE("pow") {
  SparsePoly x = SparsePoly::variable(2, 0);
  SparsePoly xp1 = x + SparsePoly::constant(2, 1);
  CHECK(xp1.pow(0) == SparsePoly::constant(2, 1));
  CHECK(xp1.pow(3) == SparsePoly::parse(2, "x1^3 + 3*x1^2 + 3*x1 + 1"));
}
