#include "rsl/rational.hpp"

#include <cctype>

#include "rsl/errors.hpp"

namespace rsl {

int sign_of(const Rational& r) { return r.sign(); }

std::string str(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  std::string_view whole = s;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(Err::SchemaError, "malformed rational '" + std::string(whole) + "'");
  Int n{std::string(num)}, d{std::string(den)};
  if (d == 0)
    throw Error(Err::SchemaError, "zero denominator in '" + std::string(whole) + "'");
  Rational r(n, d);
  return neg ? Rational(-r) : r;
}

Int floor_int(const Rational& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

Int ceil_int(const Rational& r) { return -floor_int(-r); }

Rational simplest_in_open(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_in_open: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_in_open(-hi, -lo);
  // 0 <= lo < hi
  Int n = floor_int(lo);
  Rational lo_f = lo - Rational(n), hi_f = hi - Rational(n);
  if (hi_f > 1) return Rational(n + 1);
  if (lo_f == 0) {
    // interval (n, n + hi_f) with hi_f <= 1: smallest denominator is the
    // least m with 1/m < hi_f
    Int m = floor_int(Rational(1) / hi_f) + 1;
    return Rational(n) + Rational(Int(1), m);
  }
  // 0 < lo_f < hi_f <= 1: recurse on the reciprocal interval
  Rational inner = simplest_in_open(Rational(1) / hi_f, Rational(1) / lo_f);
  return Rational(n) + Rational(1) / inner;
}

const char* err_name(Err code) {
  switch (code) {
    case Err::EndpointIsRoot: return "EndpointIsRoot";
    case Err::DegreeCapExceeded: return "DegreeCapExceeded";
    case Err::DomainMismatch: return "DomainMismatch";
    case Err::OutOfDomain: return "OutOfDomain";
    case Err::SideNotAdmissible: return "SideNotAdmissible";
    case Err::NotInIdeal: return "NotInIdeal";
    case Err::NotPositive: return "NotPositive";
    case Err::MinimalPrimeNotPrincipal: return "MinimalPrimeNotPrincipal";
    case Err::NotAMember: return "NotAMember";
    case Err::NotDisjoint: return "NotDisjoint";
    case Err::NoWitnessInterval: return "NoWitnessInterval";
    case Err::UnsupportedForMinimal: return "UnsupportedForMinimal";
    case Err::ZeroFunction: return "ZeroFunction";
    case Err::SyntaxError: return "SyntaxError";
    case Err::DiscontinuousPiecewise: return "DiscontinuousPiecewise";
    case Err::SchemaError: return "SchemaError";
    case Err::InvalidDescriptor: return "InvalidDescriptor";
    case Err::UnsupportedAlgebraicPoint: return "UnsupportedAlgebraicPoint";
  }
  return "UnknownError";
}

}  // namespace rsl
