#include "rsl/piecewise.hpp"

#include <cassert>

#include "rsl/errors.hpp"

namespace rsl {

Domain make_domain(Rational a, Rational b, std::optional<int> degree_cap) {
  if (!(a < b)) throw Error(Err::SchemaError, "domain requires a < b");
  if (degree_cap && *degree_cap < 1)
    throw Error(Err::SchemaError, "degree cap must be at least 1");
  return Domain{std::move(a), std::move(b), degree_cap};
}

namespace {

int sign_at_point(const Polynomial& p, const AlgebraicNumber& x) {
  if (x.is_rational()) return sign_of(p(*x.rational_shortcut()));
  return sign_at(p, x);
}

}  // namespace

PiecewisePoly PiecewisePoly::make(Domain dom, std::vector<AlgebraicNumber> breakpoints,
                                  std::vector<Polynomial> pieces) {
  if (pieces.size() != breakpoints.size() + 1)
    throw Error(Err::SchemaError, "piece count must be breakpoint count plus one");
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (compare(breakpoints[i], dom.a) != std::strong_ordering::greater ||
        compare(breakpoints[i], dom.b) != std::strong_ordering::less)
      throw Error(Err::SchemaError, "breakpoint outside the open domain interior");
    if (i + 1 < breakpoints.size() &&
        compare(breakpoints[i], breakpoints[i + 1]) != std::strong_ordering::less)
      throw Error(Err::SchemaError, "breakpoints must be strictly ascending");
  }
  if (dom.degree_cap) {
    for (const auto& p : pieces)
      if (p.degree() > *dom.degree_cap)
        throw Error(Err::DegreeCapExceeded,
                    "piece degree " + std::to_string(p.degree()) + " exceeds cap " +
                        std::to_string(*dom.degree_cap));
  }
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (pieces[i] == pieces[i + 1]) continue;
    Polynomial diff = pieces[i] - pieces[i + 1];
    if (sign_at_point(diff, breakpoints[i]) != 0) {
      std::string where = breakpoints[i].is_rational()
                              ? str(*breakpoints[i].rational_shortcut())
                              : "an algebraic breakpoint";
      throw Error(Err::DiscontinuousPiecewise, "pieces disagree at " + where);
    }
  }
  // canonical form: merge equal adjacent pieces
  std::vector<AlgebraicNumber> cb;
  std::vector<Polynomial> cp;
  cp.push_back(std::move(pieces[0]));
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (pieces[i + 1] == cp.back()) continue;
    cb.push_back(std::move(breakpoints[i]));
    cp.push_back(std::move(pieces[i + 1]));
  }
  PiecewisePoly f;
  f.dom_ = std::move(dom);
  f.breaks_ = std::move(cb);
  f.pieces_ = std::move(cp);
  return f;
}

PiecewisePoly pw_const(const Rational& c, const Domain& dom) {
  return pw_poly(Polynomial::constant(c), dom);
}

PiecewisePoly pw_poly(const Polynomial& p, const Domain& dom) {
  return PiecewisePoly::make(dom, {}, {p});
}

PiecewisePoly pw_from_segments(const Domain& dom, const std::vector<PwSegment>& segments) {
  if (segments.empty()) throw std::invalid_argument("pw_from_segments: no segments");
  if (segments.front().lo != dom.a || segments.back().hi != dom.b)
    throw Error(Err::SchemaError, "segments must tile the domain");
  std::vector<AlgebraicNumber> breaks;
  std::vector<Polynomial> pieces;
  for (size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (!(s.lo < s.hi)) throw Error(Err::SchemaError, "segment bounds must ascend");
    if (i > 0) {
      if (segments[i - 1].hi != s.lo)
        throw Error(Err::SchemaError, "segments must tile the domain");
      if (segments[i - 1].poly(s.lo) != s.poly(s.lo))
        throw Error(Err::DiscontinuousPiecewise, "pieces disagree at " + str(s.lo));
      breaks.push_back(AlgebraicNumber::from_rational(s.lo));
    }
    pieces.push_back(s.poly);
  }
  return PiecewisePoly::make(dom, std::move(breaks), std::move(pieces));
}

namespace {

// Common refinement of two breakpoint grids: merged interior points plus, for
// each resulting cell, the indices of the governing pieces of f and g.
struct MergedGrid {
  std::vector<AlgebraicNumber> points;
  std::vector<std::pair<size_t, size_t>> cells;
};

MergedGrid merge_grids(const PiecewisePoly& f, const PiecewisePoly& g) {
  MergedGrid m;
  const auto &fb = f.breakpoints(), &gb = g.breakpoints();
  size_t i = 0, j = 0;
  m.cells.emplace_back(0, 0);
  while (i < fb.size() || j < gb.size()) {
    if (j == gb.size()) {
      m.points.push_back(fb[i++]);
    } else if (i == fb.size()) {
      m.points.push_back(gb[j++]);
    } else {
      auto c = compare(fb[i], gb[j]);
      if (c == std::strong_ordering::less) {
        m.points.push_back(fb[i++]);
      } else if (c == std::strong_ordering::greater) {
        m.points.push_back(gb[j++]);
      } else {
        m.points.push_back(fb[i++]);
        ++j;
      }
    }
    m.cells.emplace_back(i, j);
  }
  return m;
}

void require_same_domain(const PiecewisePoly& f, const PiecewisePoly& g) {
  if (!(f.domain() == g.domain()))
    throw Error(Err::DomainMismatch, "operands live on different domains");
}

}  // namespace

PiecewisePoly pw_linear_comb(const Rational& c1, const PiecewisePoly& f,
                             const Rational& c2, const PiecewisePoly& g) {
  require_same_domain(f, g);
  MergedGrid m = merge_grids(f, g);
  std::vector<Polynomial> pieces;
  pieces.reserve(m.cells.size());
  for (auto [fi, gi] : m.cells)
    pieces.push_back(f.pieces()[fi].scaled(c1) + g.pieces()[gi].scaled(c2));
  return PiecewisePoly::make(f.domain(), std::move(m.points), std::move(pieces));
}

PiecewisePoly pw_add(const PiecewisePoly& f, const PiecewisePoly& g) {
  return pw_linear_comb(Rational(1), f, Rational(1), g);
}

PiecewisePoly pw_sub(const PiecewisePoly& f, const PiecewisePoly& g) {
  return pw_linear_comb(Rational(1), f, Rational(-1), g);
}

PiecewisePoly pw_scale(const Rational& c, const PiecewisePoly& f) {
  std::vector<Polynomial> pieces;
  for (const auto& p : f.pieces()) pieces.push_back(p.scaled(c));
  return PiecewisePoly::make(f.domain(), f.breakpoints(), std::move(pieces));
}

PiecewisePoly pw_mul(const PiecewisePoly& f, const PiecewisePoly& g) {
  require_same_domain(f, g);
  MergedGrid m = merge_grids(f, g);
  std::vector<Polynomial> pieces;
  pieces.reserve(m.cells.size());
  for (auto [fi, gi] : m.cells) pieces.push_back(f.pieces()[fi] * g.pieces()[gi]);
  return PiecewisePoly::make(f.domain(), std::move(m.points), std::move(pieces));
}

PiecewisePoly pw_sup(const PiecewisePoly& f, const PiecewisePoly& g) {
  require_same_domain(f, g);
  MergedGrid m = merge_grids(f, g);
  std::vector<AlgebraicNumber> bounds;  // interior boundaries of the output
  std::vector<Polynomial> pieces;
  AlgebraicNumber left = AlgebraicNumber::from_rational(f.domain().a);
  for (size_t c = 0; c < m.cells.size(); ++c) {
    AlgebraicNumber right = c < m.points.size()
                                ? m.points[c]
                                : AlgebraicNumber::from_rational(f.domain().b);
    const Polynomial& pf = f.pieces()[m.cells[c].first];
    const Polynomial& pg = g.pieces()[m.cells[c].second];
    Polynomial h = pf - pg;
    if (h.is_zero()) {
      if (!pieces.empty()) bounds.push_back(left);
      pieces.push_back(pf);
    } else {
      // split the cell at the sign changes of f - g
      std::vector<AlgebraicNumber> cuts;
      Rational outer_lo = left.is_rational() ? *left.rational_shortcut() : left.lo();
      Rational outer_hi = right.is_rational() ? *right.rational_shortcut() : right.hi();
      for (auto& r : isolate_roots(h, outer_lo, outer_hi)) {
        if (compare(r, left) == std::strong_ordering::greater &&
            compare(r, right) == std::strong_ordering::less)
          cuts.push_back(std::move(r));
      }
      AlgebraicNumber sub_left = left;
      for (size_t s = 0; s <= cuts.size(); ++s) {
        const AlgebraicNumber& sub_right = s < cuts.size() ? cuts[s] : right;
        Rational probe = rational_strictly_between(sub_left, sub_right);
        if (!pieces.empty()) bounds.push_back(sub_left);
        pieces.push_back(sign_of(h(probe)) > 0 ? pf : pg);
        sub_left = sub_right;
      }
    }
    left = std::move(right);
  }
  return PiecewisePoly::make(f.domain(), std::move(bounds), std::move(pieces));
}

PiecewisePoly pw_inf(const PiecewisePoly& f, const PiecewisePoly& g) {
  return pw_scale(Rational(-1), pw_sup(pw_scale(Rational(-1), f), pw_scale(Rational(-1), g)));
}

PiecewisePoly pw_abs(const PiecewisePoly& f) {
  return pw_sup(f, pw_scale(Rational(-1), f));
}

PiecewisePoly pw_pos(const PiecewisePoly& f) {
  return pw_sup(f, pw_const(Rational(0), f.domain()));
}

PiecewisePoly pw_neg(const PiecewisePoly& f) {
  return pw_pos(pw_scale(Rational(-1), f));
}

Rational pw_eval(const PiecewisePoly& f, const Rational& x) {
  if (x < f.domain().a || x > f.domain().b)
    throw Error(Err::OutOfDomain, str(x) + " lies outside the domain");
  size_t i = 0;
  while (i < f.breakpoints().size() &&
         compare(f.breakpoints()[i], x) == std::strong_ordering::less)
    ++i;
  // at a breakpoint both neighbors agree; the left one is pieces()[i]
  return f.pieces()[i](x);
}

int pw_sign_at(const PiecewisePoly& f, const AlgebraicNumber& x) {
  if (compare(x, f.domain().a) == std::strong_ordering::less ||
      compare(x, f.domain().b) == std::strong_ordering::greater)
    throw Error(Err::OutOfDomain, "point lies outside the domain");
  if (x.is_rational()) return sign_of(pw_eval(f, *x.rational_shortcut()));
  size_t i = 0;
  while (i < f.breakpoints().size() &&
         compare(f.breakpoints()[i], x) == std::strong_ordering::less)
    ++i;
  return sign_at(f.pieces()[i], x);
}

const Polynomial& governing_piece(const PiecewisePoly& f, const AlgebraicNumber& x,
                                  Side side) {
  const Domain& d = f.domain();
  if (compare(x, d.a) == std::strong_ordering::less ||
      compare(x, d.b) == std::strong_ordering::greater)
    throw Error(Err::OutOfDomain, "point lies outside the domain");
  if (side == Side::Left && compare(x, d.a) == std::strong_ordering::equal)
    throw Error(Err::SideNotAdmissible, "no left neighborhood at the left endpoint");
  if (side == Side::Right && compare(x, d.b) == std::strong_ordering::equal)
    throw Error(Err::SideNotAdmissible, "no right neighborhood at the right endpoint");
  // cell index whose open interval has x on the requested side
  size_t i = 0;
  if (side == Side::Left) {
    while (i < f.breakpoints().size() &&
           compare(f.breakpoints()[i], x) == std::strong_ordering::less)
      ++i;
  } else {
    while (i < f.breakpoints().size() &&
           compare(f.breakpoints()[i], x) != std::strong_ordering::greater)
      ++i;
  }
  return f.pieces()[i];
}

Jet one_sided_jet(const PiecewisePoly& f, const AlgebraicNumber& x, Side side, int order) {
  if (order < 0) throw std::invalid_argument("one_sided_jet: negative order");
  const Polynomial& p = governing_piece(f, x, side);
  Jet jet{x, side, {}};
  Polynomial d = p;
  for (int j = 0; j <= order; ++j) {
    jet.derivs.emplace_back(d, x);
    d = d.derivative();
  }
  return jet;
}

std::optional<int> vanishing_order(const PiecewisePoly& f, const AlgebraicNumber& x,
                                   Side side) {
  const Polynomial& p = governing_piece(f, x, side);
  if (p.is_zero()) return std::nullopt;
  Polynomial d = p;
  for (int j = 0; j <= p.degree(); ++j) {
    if (ExactScalar(d, x).sign() != 0) return j;
    d = d.derivative();
  }
  // a nonzero polynomial cannot vanish with all derivatives at one point
  assert(false);
  return std::nullopt;
}

ZeroSet zero_set(const PiecewisePoly& f) {
  ZeroSet z;
  const auto& pieces = f.pieces();
  std::vector<AlgebraicNumber> bounds;
  bounds.push_back(AlgebraicNumber::from_rational(f.domain().a));
  for (const auto& b : f.breakpoints()) bounds.push_back(b);
  bounds.push_back(AlgebraicNumber::from_rational(f.domain().b));

  // maximal runs of identically-zero pieces become closed intervals
  std::vector<std::pair<size_t, size_t>> runs;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].is_zero()) continue;
    size_t j = i;
    while (j + 1 < pieces.size() && pieces[j + 1].is_zero()) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  for (auto [i, j] : runs) z.intervals.emplace_back(bounds[i], bounds[j + 1]);

  auto inside_some_interval = [&](const AlgebraicNumber& r) {
    for (const auto& [u, v] : z.intervals)
      if (compare(r, u) != std::strong_ordering::less &&
          compare(r, v) != std::strong_ordering::greater)
        return true;
    return false;
  };

  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].is_zero()) continue;
    Rational outer_lo = bounds[i].is_rational() ? *bounds[i].rational_shortcut()
                                                : bounds[i].lo();
    Rational outer_hi = bounds[i + 1].is_rational() ? *bounds[i + 1].rational_shortcut()
                                                    : bounds[i + 1].hi();
    for (auto& r : isolate_roots(pieces[i], outer_lo, outer_hi)) {
      if (compare(r, bounds[i]) == std::strong_ordering::less ||
          compare(r, bounds[i + 1]) == std::strong_ordering::greater)
        continue;  // root of the extended polynomial outside the closed cell
      if (inside_some_interval(r)) continue;  // absorbed
      bool dup = false;
      for (const auto& seen : z.isolated)
        if (compare(seen, r) == std::strong_ordering::equal) {
          dup = true;
          break;
        }
      if (!dup) z.isolated.push_back(std::move(r));
    }
  }
  std::sort(z.isolated.begin(), z.isolated.end(),
            [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
              return compare(a, b) == std::strong_ordering::less;
            });
  return z;
}

bool pw_is_zero(const PiecewisePoly& f) {
  return f.pieces().size() == 1 && f.pieces()[0].is_zero();
}

bool pw_is_nonnegative(const PiecewisePoly& f) {
  return pw_is_zero(pw_sup(pw_scale(Rational(-1), f), pw_const(Rational(0), f.domain())));
}

bool pw_equal(const PiecewisePoly& f, const PiecewisePoly& g) {
  if (!(f.domain() == g.domain())) return false;
  if (f.pieces() != g.pieces()) return false;
  if (f.breakpoints().size() != g.breakpoints().size()) return false;
  for (size_t i = 0; i < f.breakpoints().size(); ++i)
    if (compare(f.breakpoints()[i], g.breakpoints()[i]) != std::strong_ordering::equal)
      return false;
  return true;
}

PiecewisePoly pw_restrict(const PiecewisePoly& f, const Rational& lo, const Rational& hi) {
  const Domain& d = f.domain();
  if (lo < d.a || hi > d.b || !(lo < hi))
    throw Error(Err::OutOfDomain, "restriction interval not inside the domain");
  size_t i0 = 0;  // cell governing just right of lo
  while (i0 < f.breakpoints().size() &&
         compare(f.breakpoints()[i0], lo) != std::strong_ordering::greater)
    ++i0;
  size_t i1 = 0;  // cell governing just left of hi
  while (i1 < f.breakpoints().size() &&
         compare(f.breakpoints()[i1], hi) == std::strong_ordering::less)
    ++i1;
  std::vector<AlgebraicNumber> breaks(f.breakpoints().begin() + i0,
                                      f.breakpoints().begin() + i1);
  std::vector<Polynomial> pieces(f.pieces().begin() + i0, f.pieces().begin() + i1 + 1);
  return PiecewisePoly::make(Domain{lo, hi, d.degree_cap}, std::move(breaks),
                             std::move(pieces));
}

PiecewisePoly pw_hat(const Domain& dom, const Rational& lo, const Rational& hi,
                     const Rational& height) {
  if (!(dom.a <= lo && lo < hi && hi <= dom.b))
    throw std::invalid_argument("pw_hat: support not inside the domain");
  if (height <= 0) throw std::invalid_argument("pw_hat: height must be positive");
  Rational mid = (lo + hi) / 2;
  Rational up = height / (mid - lo);
  std::vector<PwSegment> segs;
  if (dom.a < lo) segs.push_back({dom.a, lo, Polynomial()});
  segs.push_back({lo, mid, Polynomial::linear(-lo * up, up)});
  segs.push_back({mid, hi, Polynomial::linear(hi * up, -up)});
  if (hi < dom.b) segs.push_back({hi, dom.b, Polynomial()});
  return pw_from_segments(dom, segs);
}

PiecewisePoly pw_concat(const Domain& dom, const std::vector<PiecewisePoly>& parts) {
  if (parts.empty()) throw std::invalid_argument("pw_concat: no parts");
  if (parts.front().domain().a != dom.a || parts.back().domain().b != dom.b)
    throw Error(Err::SchemaError, "parts must tile the domain");
  std::vector<AlgebraicNumber> breaks;
  std::vector<Polynomial> pieces;
  for (size_t i = 0; i < parts.size(); ++i) {
    const PiecewisePoly& part = parts[i];
    if (i > 0) {
      const Rational& seam = part.domain().a;
      if (parts[i - 1].domain().b != seam)
        throw Error(Err::SchemaError, "parts must tile the domain");
      if (pw_eval(parts[i - 1], seam) != pw_eval(part, seam))
        throw Error(Err::DiscontinuousPiecewise, "pieces disagree at " + str(seam));
      breaks.push_back(AlgebraicNumber::from_rational(seam));
    }
    breaks.insert(breaks.end(), part.breakpoints().begin(), part.breakpoints().end());
    pieces.insert(pieces.end(), part.pieces().begin(), part.pieces().end());
  }
  return PiecewisePoly::make(dom, std::move(breaks), std::move(pieces));
}

}  // namespace rsl
