#include <doctest.h>

#include "nhk/fraction.hpp"
#include "nhk/suites.hpp"

using namespace nhk;

namespace {

RootDatum A1 = RootDatum::build("A1");

AffineForm simple_form(const EvalContext& ctx, int i) {
  return AffineForm::node(ctx, i);
}

}  // namespace

TEST_CASE("exact division examples") {
  EvalContext ctx = generic_context(A1);
  SparsePoly x = SparsePoly::variable(2, 0);
  AffineForm fx = simple_form(ctx, 1);  // x

  auto q = exact_divide(ctx, x * Rational(-2), fx);
  REQUIRE(q.has_value());
  CHECK(*q == SparsePoly::constant(2, -2));

  // (x^2 - h^2) / (x - h) = x + h
  SparsePoly x2mh2 = SparsePoly::parse(2, "x1^2 - h^2");
  AffineForm xmh = simple_form(ctx, 0);  // x - h (A1 highest coroot is x)
  auto q2 = exact_divide(ctx, x2mh2, xmh);
  REQUIRE(q2.has_value());
  CHECK(*q2 == SparsePoly::parse(2, "x1 + h"));

  CHECK(!exact_divide(ctx, SparsePoly::parse(2, "x1 + 1"), fx).has_value());
  // Zero divides to zero.
  CHECK(exact_divide(ctx, SparsePoly(2), fx)->is_zero());
}

TEST_CASE("Demazure divisibility: s(f) - f is divisible by the coroot form") {
  Rng rng(23);
  for (const std::string& label : {"A2", "B2", "G2"}) {
    RootDatum d = RootDatum::build(label);
    EvalContext ctx = generic_context(d);
    for (const Root& beta : d.positive_roots()) {
      ExtAffine s = ExtAffine::root_reflection(d, beta);
      auto pm = s.inverse_point_map();
      for (int iter = 0; iter < 8; ++iter) {
        SparsePoly f = random_poly(ctx, rng, 6, 5);
        SparsePoly diff =
            f.substitute_linear(pm.matrix, pm.hbar_shift, ctx.hbar) - f;
        AffineForm form = AffineForm::normalized(beta.cv.c, Rational(0)).first;
        CHECK(exact_divide(ctx, diff, form).has_value());
      }
    }
  }
}

TEST_CASE("reduce examples") {
  EvalContext ctx = generic_context(A1);
  SparsePoly x = SparsePoly::variable(2, 0);
  AffineForm fx = simple_form(ctx, 1);

  // (-2x)/{x} -> -2 with empty denominator.
  RootFraction a(ctx, x * Rational(-2), {{fx, 1}});
  CHECK(a.den().empty());
  CHECK(a.num() == SparsePoly::constant(2, -2));
  auto ap = a.as_polynomial();
  REQUIRE(ap.has_value());
  CHECK(*ap == SparsePoly::constant(2, -2));

  // (x^2 - h^2)/{x - h, x + h} -> 1.
  auto xmh = AffineForm::normalized({1}, -1).first;
  auto xph = AffineForm::normalized({1}, 1).first;
  RootFraction b(ctx, SparsePoly::parse(2, "x1^2 - h^2"), {{xmh, 1}, {xph, 1}});
  CHECK(b == RootFraction::one(ctx));

  // (x + 1)/{x} stays put.
  RootFraction c(ctx, SparsePoly::parse(2, "x1 + 1"), {{fx, 1}});
  CHECK(c.den().size() == 1);
  CHECK(!c.as_polynomial().has_value());

  // ((-2x + 2h))/{x - h} -> -2.
  RootFraction e(ctx, SparsePoly::parse(2, "-2*x1 + 2*h"), {{xmh, 1}});
  auto ep = e.as_polynomial();
  REQUIRE(ep.has_value());
  CHECK(*ep == SparsePoly::constant(2, -2));
}

TEST_CASE("normalization is idempotent and preserves the value") {
  RootDatum d = RootDatum::build("B2");
  EvalContext ctx = generic_context(d);
  Rng rng(31);
  std::vector<AffineForm> forms;
  for (int i = 0; i <= d.rank(); ++i) forms.push_back(AffineForm::node(ctx, i));
  for (int iter = 0; iter < 60; ++iter) {
    SparsePoly raw_num = random_poly(ctx, rng, 4, 3);
    std::map<AffineForm, int> raw_den;
    SparsePoly den_poly_raw = SparsePoly::constant(ctx.nvars(), 1);
    for (int k = 0; k < 2; ++k) {
      const AffineForm& f = forms[static_cast<size_t>(rng.uniform(0, 2))];
      raw_den[f] += 1;
      den_poly_raw = den_poly_raw * f.to_poly(ctx);
    }
    // Sometimes force reducibility.
    if (rng.uniform(0, 1)) raw_num = raw_num * forms[0].to_poly(ctx);

    RootFraction f(ctx, raw_num, raw_den);
    // Idempotence: re-normalizing the stored parts changes nothing.
    RootFraction again(ctx, f.num(), f.den());
    CHECK(again == f);
    // Value preserved: raw_num / raw_den == num / den by cross-multiplication.
    CHECK(raw_num * f.den_poly(ctx) == f.num() * den_poly_raw);
    // Fully reduced: no denominator form divides the numerator.
    for (const auto& [form, mult] : f.den())
      CHECK(!exact_divide(ctx, f.num(), form).has_value());
  }
}

TEST_CASE("fraction arithmetic against cross-multiplication") {
  EvalContext ctx = generic_context(A1);
  Rng rng(37);
  std::vector<AffineForm> forms = {simple_form(ctx, 1), simple_form(ctx, 0)};
  auto random_fraction = [&]() {
    SparsePoly num = random_poly(ctx, rng, 3, 3);
    std::map<AffineForm, int> den;
    int k = static_cast<int>(rng.uniform(0, 2));
    for (int i = 0; i < k; ++i) den[forms[static_cast<size_t>(rng.uniform(0, 1))]] += 1;
    return RootFraction(ctx, num, den);
  };
  for (int iter = 0; iter < 80; ++iter) {
    RootFraction a = random_fraction(), b = random_fraction();
    RootFraction sum = RootFraction::add(ctx, a, b);
    // a/A + b/B == s/S  <=>  (a B + b A) S == s A B
    SparsePoly lhs =
        (a.num() * b.den_poly(ctx) + b.num() * a.den_poly(ctx)) * sum.den_poly(ctx);
    SparsePoly rhs = sum.num() * (a.den_poly(ctx) * b.den_poly(ctx));
    CHECK(lhs == rhs);

    RootFraction prod = RootFraction::mul(ctx, a, b);
    CHECK(a.num() * b.num() * prod.den_poly(ctx) ==
          prod.num() * (a.den_poly(ctx) * b.den_poly(ctx)));
  }
}

TEST_CASE("reciprocal of a unit-over-forms fraction") {
  EvalContext ctx = generic_context(A1);
  RootFraction inv_x = RootFraction::reciprocal_form(ctx, simple_form(ctx, 1));
  RootFraction two_over_x = inv_x.scaled(2);
  RootFraction back = two_over_x.reciprocal(ctx);
  // (2/x)^{-1} = x/2.
  CHECK(back == RootFraction(SparsePoly::parse(2, "1/2*x1")));
  CHECK(RootFraction::mul(ctx, two_over_x, back) == RootFraction::one(ctx));
  CHECK_THROWS_AS(RootFraction(SparsePoly::parse(2, "x1 + 1")).reciprocal(ctx),
                  std::invalid_argument);
}

TEST_CASE("forms normalize orientation and scale") {
  auto [f1, s1] = AffineForm::normalized({-2, 0}, Rational(4));
  CHECK(f1.coroot == std::vector<long long>{1, 0});
  CHECK(f1.hk == -2);
  CHECK(s1 == -2);
  auto [f2, s2] = AffineForm::normalized({3, 6}, Rational(0));
  CHECK(f2.coroot == std::vector<long long>{1, 2});
  CHECK(s2 == 3);
  CHECK_THROWS_AS(AffineForm::normalized({0, 0}, Rational(1)), std::invalid_argument);
}

TEST_CASE("transformed forms stay root-hyperplane forms") {
  RootDatum d = RootDatum::build("A2");
  EvalContext ctx = generic_context(d);
  // Applying w to a simple-coroot form lands on the form of w(coroot).
  ExtAffine s1 = ExtAffine::simple_reflection(d, 1);
  auto [form, scale] = AffineForm::node(ctx, 2).transformed(ctx, s1);
  // s_1(coroot_2) = coroot_1 + coroot_2.
  CHECK(form.coroot == std::vector<long long>{1, 1});
  CHECK(scale == 1);
  // The affine node form picks up translation contributions.
  ExtAffine t = ExtAffine::translation(d.fundamental_weight(0));
  auto [f0, sc0] = AffineForm::node(ctx, 0).transformed(ctx, t);
  CHECK(f0.coroot == d.highest_root().cv.c);
  CHECK(f0.hk == Rational(-1) - 1);  // -h - <pi_1, delta-coroot> h = -2h
}
