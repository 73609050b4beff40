#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "rsl/atomic.hpp"
#include "rsl/spectrum.hpp"

namespace rsl {

using Json = nlohmann::json;

// Wire formats, stable across releases:
//   Rational          "p/q" (bare "p" when q = 1)
//   point             the rational string when one exists, else the
//                     algebraic object form
//   AlgebraicNumber   {"hi": rational, "lo": rational,
//                      "poly": [integer coefficient strings, ascending]}
//   Polynomial        [rational coefficient strings, ascending]
//   Domain            {"a": rational, "b": rational, "cap": int|null}
//   PiecewisePoly     {"breakpoints": [AlgebraicNumber...] (object form,
//                      always), "domain": Domain, "pieces": [Polynomial...]}
//   ExactScalar       rational string, or {"anchor": AlgebraicNumber,
//                      "poly": Polynomial} when genuinely algebraic
//   PrimeDescriptor   {"k": int|null, "kind": "M"|"L"|"R"|"Lmin"|"Rmin",
//                      "t0": point}
//   Chain             {"chain": [PrimeDescriptor...], "truncated": bool}
//   SpectrumReport    {"descriptors": [...], "k_families": [{"side":
//                      "L"|"R", "t0": point}...], "maximal_intervals":
//                      [[point, point]...]}
//   CoordIdeal        {"dim": int, "support": [int...]}
//   FinVec            [rational strings]
// Readers throw Error(SchemaError) on malformed input and accept both point
// forms wherever a point is expected.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

Json algebraic_to_json(const AlgebraicNumber& x);
Json point_to_json(const AlgebraicNumber& x);
AlgebraicNumber algebraic_from_json(const Json& j);

Json domain_to_json(const Domain& d);
Domain domain_from_json(const Json& j);

Json piecewise_to_json(const PiecewisePoly& f);
PiecewisePoly piecewise_from_json(const Json& j);

Json scalar_to_json(const ExactScalar& s);
Json lex_to_json(const LexVector& v);

Json descriptor_to_json(const PrimeDescriptor& p);
PrimeDescriptor descriptor_from_json(const Json& j, const Domain& dom);

Json chain_to_json(const Chain& c);
Json report_to_json(const SpectrumReport& r);

Json coord_ideal_to_json(const CoordIdeal& ideal);
CoordIdeal coord_ideal_from_json(const Json& j);

Json finvec_to_json(const FinVec& v);

// Compact single-line dump with a trailing newline, the CLI output form.
std::string dump_line(const Json& j);

}  // namespace rsl
