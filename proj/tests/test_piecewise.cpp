#include "doctest.h"
#include "rsl/piecewise.hpp"

#include "rsl/errors.hpp"
#include "test_util.hpp"

using namespace rsl;

namespace {

const Domain unit = make_domain(Rational(0), Rational(1), std::nullopt);

Polynomial lin(const Rational& c0, const Rational& c1) {
  return Polynomial::linear(c0, c1);
}

PiecewisePoly abs_t_half() {
  return pw_from_segments(unit, {{Rational(0), Rational(1, 2), lin(Rational(1, 2), Rational(-1))},
                                 {Rational(1, 2), Rational(1), lin(Rational(-1, 2), Rational(1))}});
}

}  // namespace

TEST_CASE("construction validates and canonicalizes") {
  // Equal adjacent pieces merge away.
  PiecewisePoly f = pw_from_segments(
      unit, {{Rational(0), Rational(1, 2), lin(Rational(0), Rational(1))},
             {Rational(1, 2), Rational(1), lin(Rational(0), Rational(1))}});
  CHECK(f.breakpoints().empty());
  CHECK(f.pieces().size() == 1);

  // Discontinuity at a seam is rejected.
  CHECK_THROWS_AS(pw_from_segments(unit, {{Rational(0), Rational(1, 2), lin(Rational(0), Rational(1))},
                                          {Rational(1, 2), Rational(1), Polynomial::constant(Rational(7))}}),
                  Error);

  // Segments must tile the domain.
  CHECK_THROWS_AS(pw_from_segments(unit, {{Rational(0), Rational(1, 3), Polynomial::constant(Rational(1))},
                                          {Rational(1, 2), Rational(1), Polynomial::constant(Rational(1))}}),
                  Error);

  // Degree cap enforcement.
  Domain capped = make_domain(Rational(0), Rational(1), 2);
  CHECK_THROWS_AS(pw_poly(Polynomial({Rational(0), Rational(0), Rational(0), Rational(1)}), capped),
                  Error);
  CHECK_NOTHROW(pw_poly(Polynomial({Rational(0), Rational(0), Rational(1)}), capped));
}

TEST_CASE("domain endpoints must be ordered") {
  CHECK_THROWS_AS(make_domain(Rational(1), Rational(0), std::nullopt), Error);
  CHECK_THROWS_AS(make_domain(Rational(1), Rational(1), std::nullopt), Error);
  CHECK_THROWS_AS(make_domain(Rational(0), Rational(1), 0), Error);
}

TEST_CASE("evaluation and arithmetic agree with pointwise math") {
  Rng rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    PiecewisePoly f = rng.continuous_pw(unit, 4, 4);
    PiecewisePoly g = rng.continuous_pw(unit, 4, 4);
    PiecewisePoly sum = pw_add(f, g);
    PiecewisePoly prod = pw_mul(f, g);
    PiecewisePoly comb = pw_linear_comb(Rational(2), f, Rational(-3), g);
    for (int s = 0; s < 8; ++s) {
      Rational x(rng.in(0, 64), 64);
      CHECK(pw_eval(sum, x) == pw_eval(f, x) + pw_eval(g, x));
      CHECK(pw_eval(prod, x) == pw_eval(f, x) * pw_eval(g, x));
      CHECK(pw_eval(comb, x) == 2 * pw_eval(f, x) - 3 * pw_eval(g, x));
    }
  }
}

TEST_CASE("sup against a constant splits at the crossing") {
  PiecewisePoly f = pw_sup(pw_poly(lin(Rational(0), Rational(1)), unit),
                           pw_const(Rational(1, 2), unit));
  REQUIRE(f.breakpoints().size() == 1);
  REQUIRE(f.breakpoints()[0].is_rational());
  CHECK(*f.breakpoints()[0].rational_shortcut() == Rational(1, 2));
  CHECK(pw_eval(f, Rational(1, 4)) == Rational(1, 2));
  CHECK(pw_eval(f, Rational(3, 4)) == Rational(3, 4));
}

TEST_CASE("sup handles tangency without spurious pieces") {
  // t^2 vs 0 touches at 0; sup is t^2 itself.
  PiecewisePoly sq = pw_poly(Polynomial({Rational(0), Rational(0), Rational(1)}),
                             make_domain(Rational(-1), Rational(1), std::nullopt));
  PiecewisePoly s = pw_sup(sq, pw_const(Rational(0), sq.domain()));
  CHECK(pw_equal(s, sq));
}

TEST_CASE("abs splits at an irrational crossing") {
  // |t^2 - 1/2| on [0,1] has a breakpoint at 1/sqrt2.
  PiecewisePoly f = pw_abs(pw_poly(Polynomial({Rational(-1, 2), Rational(0), Rational(1)}), unit));
  REQUIRE(f.breakpoints().size() == 1);
  CHECK_FALSE(f.breakpoints()[0].is_rational());
  CHECK(pw_eval(f, Rational(0)) == Rational(1, 2));
  CHECK(pw_eval(f, Rational(1)) == Rational(1, 2));
  CHECK(pw_is_nonnegative(f));
}

TEST_CASE("positive and negative parts decompose the function") {
  PiecewisePoly f = pw_poly(lin(Rational(-1, 2), Rational(1)), unit);
  PiecewisePoly p = pw_pos(f), n = pw_neg(f);
  CHECK(pw_is_nonnegative(p));
  CHECK(pw_is_nonnegative(n));
  CHECK(pw_equal(pw_sub(p, n), f));
  CHECK(pw_equal(pw_add(p, n), pw_abs(f)));
  CHECK(pw_is_zero(pw_inf(p, n)));
}

TEST_CASE("sign at algebraic points") {
  PiecewisePoly f = abs_t_half();
  AlgebraicNumber half = AlgebraicNumber::from_rational(Rational(1, 2));
  CHECK(pw_sign_at(f, half) == 0);
  CHECK(pw_sign_at(f, AlgebraicNumber::from_rational(Rational(1, 4))) == 1);
  AlgebraicNumber inv_sqrt2 =
      isolate_roots(Polynomial({Rational(-1), Rational(0), Rational(2)}), Rational(0), Rational(1))
          .at(0);
  CHECK(pw_sign_at(f, inv_sqrt2) == 1);
}

TEST_CASE("governing pieces and sides") {
  PiecewisePoly f = abs_t_half();
  AlgebraicNumber half = AlgebraicNumber::from_rational(Rational(1, 2));
  CHECK(governing_piece(f, half, Side::Left) == lin(Rational(1, 2), Rational(-1)));
  CHECK(governing_piece(f, half, Side::Right) == lin(Rational(-1, 2), Rational(1)));
  AlgebraicNumber zero = AlgebraicNumber::from_rational(Rational(0));
  CHECK_THROWS_AS(governing_piece(f, zero, Side::Left), Error);
  CHECK(governing_piece(f, zero, Side::Right) == lin(Rational(1, 2), Rational(-1)));
}

TEST_CASE("one-sided jets carry exact derivatives") {
  PiecewisePoly f = abs_t_half();
  AlgebraicNumber half = AlgebraicNumber::from_rational(Rational(1, 2));
  Jet left = one_sided_jet(f, half, Side::Left, 2);
  REQUIRE(left.derivs.size() == 3);
  CHECK(left.derivs[0].rational() == Rational(0));
  CHECK(left.derivs[1].rational() == Rational(-1));
  CHECK(left.derivs[2].rational() == Rational(0));
  Jet right = one_sided_jet(f, half, Side::Right, 1);
  CHECK(right.derivs[1].rational() == Rational(1));
}

TEST_CASE("vanishing order distinguishes flat and transversal zeros") {
  Domain dom = unit;
  // pos(t - 1/2): identically zero left of 1/2, first order to the right.
  PiecewisePoly f = pw_pos(pw_poly(lin(Rational(-1, 2), Rational(1)), dom));
  AlgebraicNumber half = AlgebraicNumber::from_rational(Rational(1, 2));
  CHECK_FALSE(vanishing_order(f, half, Side::Left).has_value());
  CHECK(vanishing_order(f, half, Side::Right) == 1);
  // (t - 1/2)^3 vanishes to third order on both sides.
  PiecewisePoly c = pw_poly(poly_pow(lin(Rational(-1, 2), Rational(1)), 3), dom);
  CHECK(vanishing_order(c, half, Side::Left) == 3);
  CHECK(vanishing_order(c, half, Side::Right) == 3);
  CHECK(vanishing_order(c, AlgebraicNumber::from_rational(Rational(1, 4)), Side::Left) == 0);
}

TEST_CASE("zero sets separate isolated points from flat intervals") {
  // pos(t - 1/2) vanishes on [0, 1/2].
  PiecewisePoly f = pw_pos(pw_poly(lin(Rational(-1, 2), Rational(1)), unit));
  ZeroSet z = zero_set(f);
  CHECK(z.isolated.empty());
  REQUIRE(z.intervals.size() == 1);
  CHECK(*z.intervals[0].first.rational_shortcut() == Rational(0));
  CHECK(*z.intervals[0].second.rational_shortcut() == Rational(1, 2));

  // |t - 1/2| has a single isolated zero.
  ZeroSet za = zero_set(abs_t_half());
  CHECK(za.intervals.empty());
  REQUIRE(za.isolated.size() == 1);
  CHECK(*za.isolated[0].rational_shortcut() == Rational(1, 2));

  // A nonvanishing function has an empty zero set.
  ZeroSet zc = zero_set(pw_const(Rational(3), unit));
  CHECK(zc.isolated.empty());
  CHECK(zc.intervals.empty());

  // The zero function: one interval covering the whole domain.
  ZeroSet zz = zero_set(pw_const(Rational(0), unit));
  REQUIRE(zz.intervals.size() == 1);
  CHECK(*zz.intervals[0].first.rational_shortcut() == Rational(0));
  CHECK(*zz.intervals[0].second.rational_shortcut() == Rational(1));
}

TEST_CASE("restriction and concatenation invert each other") {
  Rng rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    PiecewisePoly f = rng.continuous_pw(unit, 4, 3);
    PiecewisePoly left = pw_restrict(f, Rational(0), Rational(1, 3));
    PiecewisePoly right = pw_restrict(f, Rational(1, 3), Rational(1));
    PiecewisePoly glued = pw_concat(unit, {left, right});
    CHECK(pw_equal(glued, f));
  }
}

TEST_CASE("concatenation rejects gaps and jumps") {
  Domain dl = make_domain(Rational(0), Rational(1, 2), std::nullopt);
  Domain dr = make_domain(Rational(1, 2), Rational(1), std::nullopt);
  PiecewisePoly a = pw_const(Rational(1), dl);
  PiecewisePoly b = pw_const(Rational(2), dr);
  CHECK_THROWS_AS(pw_concat(unit, {a, b}), Error);
  Domain gap = make_domain(Rational(3, 4), Rational(1), std::nullopt);
  CHECK_THROWS_AS(pw_concat(unit, {a, pw_const(Rational(1), gap)}), Error);
}

TEST_CASE("hats are nonnegative tents under their peak") {
  PiecewisePoly h = pw_hat(unit, Rational(1, 4), Rational(3, 4), Rational(2));
  CHECK(pw_eval(h, Rational(0)) == Rational(0));
  CHECK(pw_eval(h, Rational(1, 4)) == Rational(0));
  CHECK(pw_eval(h, Rational(1, 2)) == Rational(2));
  CHECK(pw_eval(h, Rational(7, 8)) == Rational(0));
  CHECK(pw_is_nonnegative(h));
}

TEST_CASE("operations demand matching domains") {
  Domain other = make_domain(Rational(0), Rational(2), std::nullopt);
  PiecewisePoly f = pw_const(Rational(1), unit);
  PiecewisePoly g = pw_const(Rational(1), other);
  CHECK_THROWS_AS(pw_add(f, g), Error);
  CHECK_THROWS_AS(pw_sup(f, g), Error);
  CHECK_THROWS_AS(pw_eval(f, Rational(2)), Error);
}
