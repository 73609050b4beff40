#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rsl/algebraic.hpp"

namespace rsl {

// Interval of definition [a, b] with an optional uniform degree cap (capped
// domains model the finite-degree sublattice, uncapped the full lattice).
struct Domain {
  Rational a, b;
  std::optional<int> degree_cap;

  bool operator==(const Domain& o) const {
    return a == o.a && b == o.b && degree_cap == o.degree_cap;
  }
};

// Validates a < b and cap >= 1; throws Error(SchemaError).
Domain make_domain(Rational a, Rational b, std::optional<int> degree_cap);

// A continuous piecewise polynomial on [a, b]: breakpoints are strictly
// ascending algebraic numbers strictly inside (a, b); pieces has exactly one
// more entry; adjacent pieces agree at the breakpoint between them.
// Canonical form: adjacent pieces are distinct polynomials.
class PiecewisePoly {
public:
  // Canonicalizes (merges equal adjacent pieces) and validates ordering,
  // interiority, continuity and the degree cap.
  static PiecewisePoly make(Domain dom, std::vector<AlgebraicNumber> breakpoints,
                            std::vector<Polynomial> pieces);

  const Domain& domain() const { return dom_; }
  const std::vector<AlgebraicNumber>& breakpoints() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }

private:
  Domain dom_;
  std::vector<AlgebraicNumber> breaks_;
  std::vector<Polynomial> pieces_;
};

enum class Side { Left, Right };

// One-sided derivative jet at a point: derivs[j] is the j-th one-sided
// derivative (entries are exact rationals at rational points, polynomial
// values at algebraic ones).
struct Jet {
  AlgebraicNumber point;
  Side side;
  std::vector<ExactScalar> derivs;
};

// Zero locus: finitely many isolated algebraic points plus finitely many
// disjoint closed intervals; isolated points touching an interval are
// absorbed into it. Both lists ascend.
struct ZeroSet {
  std::vector<AlgebraicNumber> isolated;
  std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>> intervals;
};

struct PwSegment {
  Rational lo, hi;
  Polynomial poly;
};

PiecewisePoly pw_const(const Rational& c, const Domain& dom);
PiecewisePoly pw_poly(const Polynomial& p, const Domain& dom);

// Single polynomial per consecutive rational segment; segments must tile
// [a, b] and agree at the seams (Error(DiscontinuousPiecewise) otherwise).
PiecewisePoly pw_from_segments(const Domain& dom, const std::vector<PwSegment>& segments);

PiecewisePoly pw_linear_comb(const Rational& c1, const PiecewisePoly& f,
                             const Rational& c2, const PiecewisePoly& g);
PiecewisePoly pw_add(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly pw_sub(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly pw_scale(const Rational& c, const PiecewisePoly& f);
PiecewisePoly pw_mul(const PiecewisePoly& f, const PiecewisePoly& g);

// Pointwise lattice operations. pw_pos/pw_neg are the positive/negative
// parts (both nonnegative functions); f = pw_pos(f) - pw_neg(f).
PiecewisePoly pw_sup(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly pw_inf(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly pw_abs(const PiecewisePoly& f);
PiecewisePoly pw_pos(const PiecewisePoly& f);
PiecewisePoly pw_neg(const PiecewisePoly& f);

Rational pw_eval(const PiecewisePoly& f, const Rational& x);
int pw_sign_at(const PiecewisePoly& f, const AlgebraicNumber& x);

// The polynomial governing f just left/right of the point (Left needs
// x > a, Right needs x < b; Error(SideNotAdmissible) otherwise).
const Polynomial& governing_piece(const PiecewisePoly& f, const AlgebraicNumber& x, Side side);

Jet one_sided_jet(const PiecewisePoly& f, const AlgebraicNumber& x, Side side, int order);

// Smallest j whose one-sided j-th derivative at x is nonzero; nullopt means
// f vanishes identically on a one-sided neighborhood.
std::optional<int> vanishing_order(const PiecewisePoly& f, const AlgebraicNumber& x, Side side);

ZeroSet zero_set(const PiecewisePoly& f);

bool pw_is_zero(const PiecewisePoly& f);
bool pw_is_nonnegative(const PiecewisePoly& f);

// Value equality (breakpoints compared as real numbers).
bool pw_equal(const PiecewisePoly& f, const PiecewisePoly& g);

// Restriction to a rational subinterval [lo, hi] of the domain (cap kept).
PiecewisePoly pw_restrict(const PiecewisePoly& f, const Rational& lo, const Rational& hi);

// Piecewise-linear tent: 0 outside (lo, hi), height at the midpoint.
PiecewisePoly pw_hat(const Domain& dom, const Rational& lo, const Rational& hi,
                     const Rational& height);

// Concatenation of piecewise polynomials whose domains tile dom; seams must
// agree (Error(DiscontinuousPiecewise)).
PiecewisePoly pw_concat(const Domain& dom, const std::vector<PiecewisePoly>& parts);

// Rational enclosure (lo, hi) with hi - lo <= tol of the gauge
// inf{ c > 0 : |g| <= c*f }, for f >= 0, f != 0 (Error(NotPositive)) and g in
// the principal ideal of f (Error(NotInIdeal)). The bound |g| <= hi*f is
// exact on return.
std::pair<Rational, Rational> gauge_norm(const PiecewisePoly& g, const PiecewisePoly& f,
                                         const Rational& tol);

}  // namespace rsl
