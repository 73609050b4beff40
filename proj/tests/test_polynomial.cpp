#include "doctest.h"
#include "rsl/polynomial.hpp"

#include "test_util.hpp"

using namespace rsl;

TEST_CASE("polynomial normalization strips leading zeros") {
  Polynomial p({Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(1) == Rational(2));
  CHECK(Polynomial({Rational(0)}).is_zero());
  CHECK(Polynomial{}.is_zero());
}

TEST_CASE("evaluation, derivative, arithmetic") {
  // p = 2t^2 - 3t + 1 = (2t - 1)(t - 1)
  Polynomial p({Rational(1), Rational(-3), Rational(2)});
  CHECK(p(Rational(1)) == Rational(0));
  CHECK(p(Rational(1, 2)) == Rational(0));
  CHECK(p(Rational(0)) == Rational(1));
  CHECK(p.derivative() == Polynomial({Rational(-3), Rational(4)}));

  Polynomial q = Polynomial::linear(Rational(-1), Rational(1));  // t - 1
  Polynomial r = Polynomial::linear(Rational(-1), Rational(2));  // 2t - 1
  CHECK(q * r == p);
  CHECK(p + (-p) == Polynomial{});
  CHECK(p.scaled(Rational(3))(Rational(2)) == Rational(9));
}

TEST_CASE("division with remainder") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = rng.poly(5);
    Polynomial b = rng.poly(3);
    if (b.is_zero()) continue;
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("gcd and squarefree part") {
  Polynomial t = Polynomial::variable();
  Polynomial a = (t - Polynomial::constant(Rational(1))) * (t - Polynomial::constant(Rational(1)));
  Polynomial b = (t - Polynomial::constant(Rational(1))) * (t + Polynomial::constant(Rational(2)));
  Polynomial g = poly_gcd(a, b);
  CHECK(g.degree() == 1);
  CHECK(g(Rational(1)) == Rational(0));

  Polynomial sq = squarefree_part(a * b);  // roots 1 (triple), -2
  CHECK(sq.degree() == 2);
  CHECK(sq(Rational(1)) == Rational(0));
  CHECK(sq(Rational(-2)) == Rational(0));
}

TEST_CASE("primitive part and positive leading coefficient") {
  Polynomial p({Rational(2, 3), Rational(-4, 3)});
  Polynomial pp = positive_leading(primitive_part(p));
  CHECK(pp.leading() > 0);
  // Content is gone: integer coprime coefficients.
  CHECK(pp == Polynomial({Rational(-1), Rational(2)}));

  Polynomial m({Rational(1), Rational(-1)});
  CHECK(positive_leading(m).leading() > 0);
}

TEST_CASE("power and root removal") {
  Polynomial t = Polynomial::variable();
  Polynomial c = poly_pow(t - Polynomial::constant(Rational(1, 2)), 3);
  CHECK(c.degree() == 3);
  CHECK(c(Rational(1, 2)) == Rational(0));
  Polynomial once = divide_out_root(c, Rational(1, 2));
  CHECK(once.degree() == 2);
  CHECK(once(Rational(1, 2)) == Rational(0));
}
