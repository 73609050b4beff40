#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "rsl/polynomial.hpp"

namespace rsl {

// A real algebraic number: the unique root of `defining` inside the open
// interval (lo, hi).
//
// Invariants: defining is squarefree with integer coefficients, content 1 and
// positive leading coefficient; lo < hi; neither endpoint is a root; Sturm
// count on (lo, hi) is exactly 1. Rational values canonicalize to a degree-one
// defining polynomial q*t - p and carry p/q in rational_shortcut, so a number
// is rational iff the shortcut is present.
class AlgebraicNumber {
public:
  static AlgebraicNumber from_rational(const Rational& r);

  // Canonicalizes (squarefree/primitive/positive-leading, rational detection)
  // and validates the isolation invariant; throws Error(SchemaError) if the
  // input does not isolate exactly one root or an endpoint is a root.
  static AlgebraicNumber make(const Polynomial& defining, const Rational& lo,
                              const Rational& hi);

  const Polynomial& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const std::optional<Rational>& rational_shortcut() const { return shortcut_; }
  bool is_rational() const { return shortcut_.has_value(); }

private:
  AlgebraicNumber() = default;
  Polynomial defining_;
  Rational lo_, hi_;
  std::optional<Rational> shortcut_;
  friend struct AlgebraicDetail;
};

// Number of distinct real roots of p in the open interval (lo, hi). p need
// not be squarefree. Throws Error(EndpointIsRoot) if p vanishes at lo or hi;
// p must be nonzero.
int sturm_root_count(const Polynomial& p, const Rational& lo, const Rational& hi);

// All distinct real roots of p in the closed interval [lo, hi], ascending.
// p must be nonzero; lo <= hi.
std::vector<AlgebraicNumber> isolate_roots(const Polynomial& p, const Rational& lo,
                                           const Rational& hi);

// Same number, isolating interval of width <= width. Idempotent on rational
// values: the interval becomes (r - width/2, r + width/2).
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

// Sign of p at the algebraic point (0 exactly when the point is a root of p).
int sign_at(const Polynomial& p, const AlgebraicNumber& a);

std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
std::strong_ordering compare(const AlgebraicNumber& a, const Rational& r);

// Rational enclosure of width <= width around the number.
std::pair<Rational, Rational> enclosure(const AlgebraicNumber& a, const Rational& width);

// A rational point strictly between two algebraic numbers u < v.
Rational rational_strictly_between(const AlgebraicNumber& u, const AlgebraicNumber& v);

// An exact real scalar: either a rational, or the value p(alpha) of a
// rational polynomial at an algebraic point alpha (the form one-sided
// derivatives take at algebraic breakpoints). Every consumer needs signs and
// same-anchor comparisons only, which stay exact and factorization-free.
class ExactScalar {
public:
  ExactScalar() : rat_(0) {}
  ExactScalar(Rational r) : rat_(std::move(r)) {}
  ExactScalar(const Polynomial& p, const AlgebraicNumber& at);

  bool is_rational() const { return !alg_.has_value(); }
  const Rational& rational() const { return rat_; }
  const Polynomial& poly() const { return alg_->first; }
  const AlgebraicNumber& anchor() const { return alg_->second; }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  ExactScalar operator-() const;

  // Rational enclosure of width <= width (exact point for rationals).
  std::pair<Rational, Rational> enclosure(const Rational& width) const;

private:
  Rational rat_;
  std::optional<std::pair<Polynomial, AlgebraicNumber>> alg_;
};

// Total order on values; anchors of two non-rational scalars must agree as
// real numbers (entries of jets taken at one point always do).
std::strong_ordering compare(const ExactScalar& x, const ExactScalar& y);

}  // namespace rsl
