#include "rsl/json_io.hpp"

#include "rsl/errors.hpp"

namespace rsl {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw Error(Err::SchemaError, what);
}

const Json& field(const Json& j, const char* key) {
  need(j.is_object(), "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw Error(Err::SchemaError, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json rational_to_json(const Rational& r) { return str(r); }

Rational rational_from_json(const Json& j) {
  need(j.is_string(), "expected a rational string");
  return parse_rational(j.get<std::string>());
}

Json poly_to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(str(c));
  return arr;
}

Polynomial poly_from_json(const Json& j) {
  need(j.is_array(), "expected a coefficient array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

Json algebraic_to_json(const AlgebraicNumber& x) {
  Json j;
  j["lo"] = str(x.lo());
  j["hi"] = str(x.hi());
  j["poly"] = poly_to_json(x.defining());
  return j;
}

Json point_to_json(const AlgebraicNumber& x) {
  if (x.is_rational()) return str(*x.rational_shortcut());
  return algebraic_to_json(x);
}

AlgebraicNumber algebraic_from_json(const Json& j) {
  if (j.is_string()) return AlgebraicNumber::from_rational(rational_from_json(j));
  need(j.is_object(), "expected a rational string or an algebraic object");
  Polynomial p = poly_from_json(field(j, "poly"));
  Rational lo = rational_from_json(field(j, "lo"));
  Rational hi = rational_from_json(field(j, "hi"));
  return AlgebraicNumber::make(p, lo, hi);
}

Json domain_to_json(const Domain& d) {
  Json j;
  j["a"] = str(d.a);
  j["b"] = str(d.b);
  j["cap"] = d.degree_cap ? Json(*d.degree_cap) : Json(nullptr);
  return j;
}

Domain domain_from_json(const Json& j) {
  Rational a = rational_from_json(field(j, "a"));
  Rational b = rational_from_json(field(j, "b"));
  std::optional<int> cap;
  const Json& c = field(j, "cap");
  if (!c.is_null()) {
    need(c.is_number_integer(), "cap must be an integer or null");
    cap = c.get<int>();
  }
  return make_domain(std::move(a), std::move(b), cap);
}

Json piecewise_to_json(const PiecewisePoly& f) {
  Json j;
  j["domain"] = domain_to_json(f.domain());
  Json breaks = Json::array();
  for (const auto& b : f.breakpoints()) breaks.push_back(algebraic_to_json(b));
  j["breakpoints"] = std::move(breaks);
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) pieces.push_back(poly_to_json(p));
  j["pieces"] = std::move(pieces);
  return j;
}

PiecewisePoly piecewise_from_json(const Json& j) {
  Domain dom = domain_from_json(field(j, "domain"));
  const Json& jb = field(j, "breakpoints");
  need(jb.is_array(), "breakpoints must be an array");
  std::vector<AlgebraicNumber> breaks;
  for (const auto& b : jb) breaks.push_back(algebraic_from_json(b));
  const Json& jp = field(j, "pieces");
  need(jp.is_array(), "pieces must be an array");
  std::vector<Polynomial> pieces;
  for (const auto& p : jp) pieces.push_back(poly_from_json(p));
  return PiecewisePoly::make(std::move(dom), std::move(breaks), std::move(pieces));
}

Json scalar_to_json(const ExactScalar& s) {
  if (s.is_rational()) return str(s.rational());
  Json j;
  j["anchor"] = algebraic_to_json(s.anchor());
  j["poly"] = poly_to_json(s.poly());
  return j;
}

Json lex_to_json(const LexVector& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(scalar_to_json(e));
  return arr;
}

Json descriptor_to_json(const PrimeDescriptor& p) {
  Json j;
  j["kind"] = kind_tag(p.kind);
  j["t0"] = point_to_json(p.t0);
  j["k"] = p.k ? Json(*p.k) : Json(nullptr);
  return j;
}

PrimeDescriptor descriptor_from_json(const Json& j, const Domain& dom) {
  const Json& jk = field(j, "kind");
  need(jk.is_string(), "kind must be a string");
  std::string tag = jk.get<std::string>();
  PrimeKind kind;
  if (tag == "M")
    kind = PrimeKind::Maximal;
  else if (tag == "L")
    kind = PrimeKind::LeftK;
  else if (tag == "R")
    kind = PrimeKind::RightK;
  else if (tag == "Lmin")
    kind = PrimeKind::LeftMin;
  else if (tag == "Rmin")
    kind = PrimeKind::RightMin;
  else
    throw Error(Err::SchemaError, "unknown kind '" + tag + "'");
  AlgebraicNumber t0 = algebraic_from_json(field(j, "t0"));
  std::optional<int> k;
  const Json& jkk = field(j, "k");
  if (!jkk.is_null()) {
    need(jkk.is_number_integer(), "k must be an integer or null");
    k = jkk.get<int>();
  }
  return make_descriptor(kind, std::move(t0), k, dom);
}

Json chain_to_json(const Chain& c) {
  Json j;
  Json arr = Json::array();
  for (const auto& d : c.descriptors) arr.push_back(descriptor_to_json(d));
  j["chain"] = std::move(arr);
  j["truncated"] = c.truncated;
  return j;
}

Json report_to_json(const SpectrumReport& r) {
  Json j;
  Json descs = Json::array();
  for (const auto& d : r.descriptors) descs.push_back(descriptor_to_json(d));
  j["descriptors"] = std::move(descs);
  Json fams = Json::array();
  for (const auto& f : r.k_families) {
    Json fj;
    fj["side"] = f.side == Side::Left ? "L" : "R";
    fj["t0"] = point_to_json(f.t0);
    fams.push_back(std::move(fj));
  }
  j["k_families"] = std::move(fams);
  Json ivs = Json::array();
  for (const auto& [u, v] : r.maximal_intervals)
    ivs.push_back(Json::array({point_to_json(u), point_to_json(v)}));
  j["maximal_intervals"] = std::move(ivs);
  return j;
}

Json coord_ideal_to_json(const CoordIdeal& ideal) {
  Json j;
  j["dim"] = ideal.dim;
  j["support"] = ideal.support;
  return j;
}

CoordIdeal coord_ideal_from_json(const Json& j) {
  const Json& jd = field(j, "dim");
  need(jd.is_number_integer(), "dim must be an integer");
  const Json& js = field(j, "support");
  need(js.is_array(), "support must be an array");
  std::vector<int> sup;
  for (const auto& e : js) {
    need(e.is_number_integer(), "support entries must be integers");
    sup.push_back(e.get<int>());
  }
  return make_coord_ideal(jd.get<int>(), std::move(sup));
}

Json finvec_to_json(const FinVec& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(str(e));
  return arr;
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

}  // namespace rsl
