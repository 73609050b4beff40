#include "doctest.h"
#include "rsl/json_io.hpp"

#include "rsl/parse.hpp"
#include "test_util.hpp"

using namespace rsl;

namespace {
const Domain unit = make_domain(Rational(0), Rational(1), std::nullopt);
}

TEST_CASE("rational round trips") {
  for (const char* s : {"0", "1", "-3/4", "22/7", "-5"}) {
    Rational r = parse_rational(s);
    CHECK(rational_from_json(rational_to_json(r)) == r);
    CHECK(rational_to_json(r).get<std::string>() == s);
  }
  CHECK_THROWS_AS(rational_from_json(Json("x/y")), Error);
  CHECK_THROWS_AS(rational_from_json(Json(3)), Error);
}

TEST_CASE("algebraic numbers keep their isolating interval") {
  AlgebraicNumber root2 =
      isolate_roots(Polynomial({Rational(-2), Rational(0), Rational(1)}),
                    Rational(0), Rational(2))
          .at(0);
  Json j = algebraic_to_json(root2);
  AlgebraicNumber back = algebraic_from_json(j);
  CHECK(back.defining() == root2.defining());
  CHECK(back.lo() == root2.lo());
  CHECK(back.hi() == root2.hi());
  CHECK(compare(back, root2) == std::strong_ordering::equal);

  // Points serialize compactly when rational.
  Json p = point_to_json(AlgebraicNumber::from_rational(Rational(1, 2)));
  CHECK(p.is_string());
  CHECK(algebraic_from_json(p).rational_shortcut() == Rational(1, 2));
}

TEST_CASE("piecewise functions round trip") {
  PiecewisePoly f = elaborate(parse_expr("abs(t - 1/2)"), unit);
  PiecewisePoly back = piecewise_from_json(piecewise_to_json(f));
  CHECK(pw_equal(f, back));
  CHECK(back.domain() == f.domain());

  // With a cap and an algebraic breakpoint.
  Domain capped = make_domain(Rational(0), Rational(1), 2);
  PiecewisePoly g = elaborate(parse_expr("max(t^2, 1/2)"), capped);
  PiecewisePoly gb = piecewise_from_json(piecewise_to_json(g));
  CHECK(pw_equal(g, gb));
  CHECK(gb.domain().degree_cap == 2);
}

TEST_CASE("malformed piecewise JSON is refused with a schema error") {
  auto reject = [](const char* text) {
    Json j = Json::parse(text);
    CHECK_THROWS_AS(piecewise_from_json(j), Error);
  };
  reject(R"({"domain":{"a":"0","b":"1","cap":null},"pieces":[["0","1"]]})");  // no breakpoints
  reject(R"({"breakpoints":[],"domain":{"a":"1","b":"0","cap":null},"pieces":[["0"]]})");
  reject(R"({"breakpoints":["1/2"],"domain":{"a":"0","b":"1","cap":null},"pieces":[["0"]]})");
  reject(R"([1,2,3])");
}

TEST_CASE("scalars and lex vectors") {
  AlgebraicNumber root2 =
      isolate_roots(Polynomial({Rational(-2), Rational(0), Rational(1)}),
                    Rational(0), Rational(2))
          .at(0);
  ExactScalar s(Polynomial::variable(), root2);
  Json j = scalar_to_json(s);
  CHECK(j.is_object());
  Json r = scalar_to_json(ExactScalar(Rational(-3, 4)));
  CHECK(r.is_string());

  LexVector v{ExactScalar(Rational(0)), s, ExactScalar(Rational(1))};
  Json lj = lex_to_json(v);
  REQUIRE(lj.is_array());
  CHECK(lj.size() == 3);
}

TEST_CASE("descriptors, chains, and reports") {
  PrimeDescriptor p = parse_descriptor("L:1/2:2", unit);
  Json j = descriptor_to_json(p);
  PrimeDescriptor back = descriptor_from_json(j, unit);
  CHECK(descriptor_equal(p, back));

  // Descriptor JSON is revalidated against the domain on the way in.
  Json bad = descriptor_to_json(p);
  bad["t0"] = "3/2";
  CHECK_THROWS_AS(descriptor_from_json(bad, unit), Error);
  Json badk = descriptor_to_json(p);
  badk["k"] = 0;
  CHECK_THROWS_AS(descriptor_from_json(badk, unit), Error);

  Chain c = chain_above(parse_descriptor("Lmin:1/2", unit), unit, 3);
  Json cj = chain_to_json(c);
  CHECK(cj["truncated"].get<bool>());
  CHECK(cj["chain"].size() == c.descriptors.size());

  SpectrumReport rep = primes_containing(elaborate(parse_expr("pos(t - 1/2)"), unit));
  Json rj = report_to_json(rep);
  CHECK(rj["descriptors"].size() == 2);
  CHECK(rj["k_families"].size() == 2);
  CHECK(rj["maximal_intervals"].size() == 1);
}

TEST_CASE("coordinate ideals and vectors") {
  CoordIdeal i{3, {1, 3}};
  CoordIdeal back = coord_ideal_from_json(coord_ideal_to_json(i));
  CHECK(back.dim == 3);
  CHECK(back.support == i.support);
  CHECK_THROWS_AS(coord_ideal_from_json(Json::parse(R"({"dim":2,"support":[3]})")), Error);

  FinVec v{Rational(1), Rational(-1, 2)};
  Json vj = finvec_to_json(v);
  REQUIRE(vj.is_array());
  CHECK(vj[1].get<std::string>() == "-1/2");
}

TEST_CASE("single-line dumps end in a newline") {
  Json j;
  j["x"] = "1";
  std::string line = dump_line(j);
  CHECK(line.back() == '\n');
  CHECK(line.find('\n') == line.size() - 1);
}
