#include "doctest.h"
#include "rsl/piecewise.hpp"

#include "rsl/errors.hpp"
#include "test_util.hpp"

using namespace rsl;
using rsltest::Rng;

namespace {
const Domain unit = make_domain(Rational(0), Rational(1), std::nullopt);

PiecewisePoly abs_t_half() {
  return pw_abs(pw_poly(Polynomial::linear(Rational(-1, 2), Rational(1)), unit));
}
}  // namespace

TEST_CASE("gauge of a square against the absolute value") {
  // sup of (t-1/2)^2 / |t-1/2| over [0,1] is 1/2, attained at the endpoints.
  PiecewisePoly g = pw_poly(poly_pow(Polynomial::linear(Rational(-1, 2), Rational(1)), 2), unit);
  auto [lo, hi] = gauge_norm(g, abs_t_half(), Rational(1, 1000));
  CHECK(hi - lo <= Rational(1, 1000));
  CHECK(lo < Rational(1, 2));
  CHECK(hi >= Rational(1, 2));
  // The upper bound is a certificate: |g| <= hi * f exactly.
  CHECK(pw_is_nonnegative(pw_sub(pw_scale(hi, abs_t_half()), pw_abs(g))));
}

TEST_CASE("gauge of an exact multiple is the multiplier") {
  PiecewisePoly f = abs_t_half();
  PiecewisePoly g = pw_scale(Rational(3, 4), f);
  auto [lo, hi] = gauge_norm(g, f, Rational(1, 64));
  CHECK(lo < Rational(3, 4));
  CHECK(hi >= Rational(3, 4));
  CHECK(hi - lo <= Rational(1, 64));
}

TEST_CASE("gauge of the zero function is zero") {
  auto [lo, hi] = gauge_norm(pw_const(Rational(0), unit), abs_t_half(), Rational(1, 16));
  CHECK(lo == Rational(0));
  CHECK(hi == Rational(0));
}

TEST_CASE("gauge rejects bad inputs") {
  PiecewisePoly f = abs_t_half();
  // Base must be nonnegative and nonzero.
  CHECK_THROWS_AS(gauge_norm(f, pw_const(Rational(0), unit), Rational(1, 4)), Error);
  CHECK_THROWS_AS(gauge_norm(f, pw_poly(Polynomial::linear(Rational(-1, 2), Rational(1)), unit),
                             Rational(1, 4)),
                  Error);
  // Nonmembers are rejected rather than assigned an unbounded value.
  CHECK_THROWS_AS(gauge_norm(pw_const(Rational(1), unit), f, Rational(1, 4)), Error);
  // Tolerance must be positive.
  CHECK_THROWS_AS(gauge_norm(f, f, Rational(0)), Error);
}

TEST_CASE("random members of a principal ideal get enclosed gauges") {
  Rng rng(1111);
  PiecewisePoly f = abs_t_half();
  for (int trial = 0; trial < 25; ++trial) {
    // u*f is always in the principal ideal of f.
    PiecewisePoly u = rng.continuous_pw(unit, 3, 2);
    PiecewisePoly g = pw_mul(u, f);
    auto [lo, hi] = gauge_norm(g, f, Rational(1, 256));
    CHECK(hi - lo <= Rational(1, 256));
    CHECK(lo >= Rational(0));
    // Certificate on the upper end.
    CHECK(pw_is_nonnegative(pw_sub(pw_scale(hi, f), pw_abs(g))));
    // Sampled ratios never exceed the upper bound.
    for (int k = 1; k < 16; ++k) {
      Rational x(k, 16);
      Rational fv = pw_eval(f, x);
      Rational gv = pw_eval(g, x);
      if (gv < 0) gv = -gv;
      CHECK(gv <= hi * fv);
    }
  }
}
