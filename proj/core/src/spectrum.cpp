#include "rsl/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsl/errors.hpp"

namespace rsl {

const char* kind_tag(PrimeKind kind) {
  switch (kind) {
    case PrimeKind::Maximal: return "M";
    case PrimeKind::LeftK: return "L";
    case PrimeKind::RightK: return "R";
    case PrimeKind::LeftMin: return "Lmin";
    case PrimeKind::RightMin: return "Rmin";
  }
  return "?";
}

bool descriptor_equal(const PrimeDescriptor& p, const PrimeDescriptor& q) {
  return p.kind == q.kind && p.k == q.k && p.domain == q.domain &&
         compare(p.t0, q.t0) == std::strong_ordering::equal;
}

namespace {

bool is_left(PrimeKind k) { return k == PrimeKind::LeftK || k == PrimeKind::LeftMin; }
bool is_right(PrimeKind k) { return k == PrimeKind::RightK || k == PrimeKind::RightMin; }
bool is_min(PrimeKind k) { return k == PrimeKind::LeftMin || k == PrimeKind::RightMin; }
bool is_intermediate(PrimeKind k) {
  return k == PrimeKind::LeftK || k == PrimeKind::RightK;
}

int kind_rank(PrimeKind k) {
  switch (k) {
    case PrimeKind::Maximal: return 0;
    case PrimeKind::LeftK: return 1;
    case PrimeKind::RightK: return 2;
    case PrimeKind::LeftMin: return 3;
    case PrimeKind::RightMin: return 4;
  }
  return 5;
}

}  // namespace

PrimeDescriptor make_descriptor(PrimeKind kind, AlgebraicNumber t0,
                                std::optional<int> k, const Domain& dom) {
  if (compare(t0, dom.a) == std::strong_ordering::less ||
      compare(t0, dom.b) == std::strong_ordering::greater)
    throw Error(Err::OutOfDomain, "base point outside the domain");
  if (is_left(kind) && compare(t0, dom.a) == std::strong_ordering::equal)
    throw Error(Err::SideNotAdmissible, "no left neighborhood at the left endpoint");
  if (is_right(kind) && compare(t0, dom.b) == std::strong_ordering::equal)
    throw Error(Err::SideNotAdmissible, "no right neighborhood at the right endpoint");
  if (is_intermediate(kind)) {
    if (!k) throw Error(Err::InvalidDescriptor, "this kind needs k");
    if (*k < 1) throw Error(Err::InvalidDescriptor, "k must be at least 1");
    if (dom.degree_cap) {
      if (*k > *dom.degree_cap)
        throw Error(Err::InvalidDescriptor, "k exceeds the degree cap");
      if (*k == *dom.degree_cap)
        return PrimeDescriptor{kind == PrimeKind::LeftK ? PrimeKind::LeftMin
                                                        : PrimeKind::RightMin,
                               std::move(t0), std::nullopt, dom};
    }
  } else if (k) {
    throw Error(Err::InvalidDescriptor, "this kind takes no k");
  }
  return PrimeDescriptor{kind, std::move(t0), k, dom};
}

PrimeDescriptor maximal_at(AlgebraicNumber t0, const Domain& dom) {
  return make_descriptor(PrimeKind::Maximal, std::move(t0), std::nullopt, dom);
}
PrimeDescriptor left_k(AlgebraicNumber t0, int k, const Domain& dom) {
  return make_descriptor(PrimeKind::LeftK, std::move(t0), k, dom);
}
PrimeDescriptor right_k(AlgebraicNumber t0, int k, const Domain& dom) {
  return make_descriptor(PrimeKind::RightK, std::move(t0), k, dom);
}
PrimeDescriptor left_min(AlgebraicNumber t0, const Domain& dom) {
  return make_descriptor(PrimeKind::LeftMin, std::move(t0), std::nullopt, dom);
}
PrimeDescriptor right_min(AlgebraicNumber t0, const Domain& dom) {
  return make_descriptor(PrimeKind::RightMin, std::move(t0), std::nullopt, dom);
}

std::string format_descriptor(const PrimeDescriptor& p) {
  if (!p.t0.is_rational())
    throw Error(Err::UnsupportedAlgebraicPoint,
                "the compact text form needs a rational base point");
  std::string s = std::string(kind_tag(p.kind)) + ":" + str(*p.t0.rational_shortcut());
  if (p.k) s += ":" + std::to_string(*p.k);
  return s;
}

std::string describe_descriptor(const PrimeDescriptor& p) {
  std::string at = p.t0.is_rational()
                       ? str(*p.t0.rational_shortcut())
                       : "the root of " + p.t0.defining().str() + " in (" +
                             str(p.t0.lo()) + ", " + str(p.t0.hi()) + ")";
  switch (p.kind) {
    case PrimeKind::Maximal:
      return "functions vanishing at " + at;
    case PrimeKind::LeftK:
      return "functions whose value and first " + std::to_string(*p.k) +
             " left derivatives vanish at " + at;
    case PrimeKind::RightK:
      return "functions whose value and first " + std::to_string(*p.k) +
             " right derivatives vanish at " + at;
    case PrimeKind::LeftMin:
      return "functions identically zero on a left neighborhood of " + at;
    case PrimeKind::RightMin:
      return "functions identically zero on a right neighborhood of " + at;
  }
  return "";
}

PrimeDescriptor parse_descriptor(const std::string& s, const Domain& dom) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t colon = s.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() < 2)
    throw Error(Err::InvalidDescriptor, "expected KIND:t0 or KIND:t0:k");
  PrimeKind kind;
  bool needs_k = false;
  if (parts[0] == "M") {
    kind = PrimeKind::Maximal;
  } else if (parts[0] == "L") {
    kind = PrimeKind::LeftK;
    needs_k = true;
  } else if (parts[0] == "R") {
    kind = PrimeKind::RightK;
    needs_k = true;
  } else if (parts[0] == "Lmin") {
    kind = PrimeKind::LeftMin;
  } else if (parts[0] == "Rmin") {
    kind = PrimeKind::RightMin;
  } else {
    throw Error(Err::InvalidDescriptor, "unknown kind '" + parts[0] + "'");
  }
  if (parts.size() != (needs_k ? 3u : 2u))
    throw Error(Err::InvalidDescriptor,
                needs_k ? "kind '" + parts[0] + "' needs KIND:t0:k"
                        : "kind '" + parts[0] + "' takes KIND:t0");
  Rational t0;
  try {
    t0 = parse_rational(parts[1]);
  } catch (const Error& e) {
    throw Error(Err::InvalidDescriptor, std::string("bad base point: ") + e.detail());
  }
  std::optional<int> k;
  if (needs_k) {
    const std::string& ks = parts[2];
    if (ks.empty() || ks.size() > 6 ||
        ks.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Err::InvalidDescriptor, "k must be a small positive integer");
    k = std::stoi(ks);
  }
  return make_descriptor(kind, AlgebraicNumber::from_rational(t0), k, dom);
}

bool member(const PiecewisePoly& f, const PrimeDescriptor& pd) {
  if (!(pd.domain == f.domain()))
    throw Error(Err::DomainMismatch, "descriptor and function live on different domains");
  PrimeDescriptor p = make_descriptor(pd.kind, pd.t0, pd.k, f.domain());
  switch (p.kind) {
    case PrimeKind::Maximal:
      return pw_sign_at(f, p.t0) == 0;
    case PrimeKind::LeftK: {
      auto o = vanishing_order(f, p.t0, Side::Left);
      return !o || *o >= *p.k + 1;
    }
    case PrimeKind::RightK: {
      auto o = vanishing_order(f, p.t0, Side::Right);
      return !o || *o >= *p.k + 1;
    }
    case PrimeKind::LeftMin:
      return !vanishing_order(f, p.t0, Side::Left).has_value();
    case PrimeKind::RightMin:
      return !vanishing_order(f, p.t0, Side::Right).has_value();
  }
  return false;
}

bool contains(const PrimeDescriptor& outer, const PrimeDescriptor& inner) {
  if (!(outer.domain == inner.domain))
    throw Error(Err::DomainMismatch, "descriptors live on different domains");
  if (compare(outer.t0, inner.t0) != std::strong_ordering::equal) return false;
  switch (outer.kind) {
    case PrimeKind::Maximal:
      return true;
    case PrimeKind::LeftK:
      if (inner.kind == PrimeKind::LeftMin) return true;
      return inner.kind == PrimeKind::LeftK && *inner.k >= *outer.k;
    case PrimeKind::RightK:
      if (inner.kind == PrimeKind::RightMin) return true;
      return inner.kind == PrimeKind::RightK && *inner.k >= *outer.k;
    case PrimeKind::LeftMin:
      return inner.kind == PrimeKind::LeftMin;
    case PrimeKind::RightMin:
      return inner.kind == PrimeKind::RightMin;
  }
  return false;
}

Chain chain_above(const PrimeDescriptor& pd, const Domain& dom, int cutoff) {
  if (cutoff < 1) throw Error(Err::SchemaError, "cutoff must be at least 1");
  PrimeDescriptor p = make_descriptor(pd.kind, pd.t0, pd.k, dom);
  Chain c{{p}, false};
  if (p.kind == PrimeKind::Maximal) return c;
  PrimeKind side_k = is_left(p.kind) ? PrimeKind::LeftK : PrimeKind::RightK;
  // Highest intermediate order to list. Finite cases (an intermediate start,
  // or a capped minimal start) always get the full chain; only the unbounded
  // ladder above a minimal prime in uncapped mode is cut off.
  int top;
  if (is_intermediate(p.kind)) {
    top = *p.k - 1;
  } else if (dom.degree_cap) {
    top = *dom.degree_cap - 1;
  } else {
    top = cutoff;
    c.truncated = true;
  }
  for (int j = top; j >= 1; --j)
    c.descriptors.push_back(make_descriptor(side_k, p.t0, j, dom));
  c.descriptors.push_back(PrimeDescriptor{PrimeKind::Maximal, p.t0, std::nullopt, dom});
  return c;
}

std::optional<int> max_chain_length(const Domain& dom) { return dom.degree_cap; }

Chain witness_chain(const Domain& dom, const Rational& t0, int length) {
  if (length < 0) throw Error(Err::SchemaError, "length must be nonnegative");
  if (dom.degree_cap && length > *dom.degree_cap)
    throw Error(Err::SchemaError, "no chain longer than the degree cap exists");
  AlgebraicNumber t = AlgebraicNumber::from_rational(t0);
  if (length == 0) return Chain{{maximal_at(std::move(t), dom)}, false};
  // left_k normalizes to the minimal kind when length hits the cap
  return chain_above(left_k(std::move(t), length, dom), dom, length);
}

namespace {

LexVector jet_vector(const PiecewisePoly& f, const AlgebraicNumber& t0, Side side,
                     int entries) {
  const Polynomial& piece = governing_piece(f, t0, side);
  LexVector out;
  out.reserve(entries);
  Polynomial d = piece;
  for (int j = 0; j < entries; ++j) {
    ExactScalar e(d, t0);
    // t -> t0 - h flips every odd derivative, so the left jet is negated at
    // odd orders; that makes the leading entry carry the sign of f just left
    // of t0 and turns the map into a lattice homomorphism.
    if (side == Side::Left && (j % 2) == 1) e = -e;
    out.push_back(std::move(e));
    d = d.derivative();
  }
  return out;
}

}  // namespace

LexVector psi_hom(const PiecewisePoly& f, const AlgebraicNumber& t0, Side side) {
  const Polynomial& piece = governing_piece(f, t0, side);
  LexVector v = jet_vector(f, t0, side, std::max(piece.degree(), 0) + 1);
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

LexVector phi_hom(const PiecewisePoly& f, const AlgebraicNumber& t0, Side side,
                  int order) {
  if (order < 0) throw std::invalid_argument("phi_hom: negative order");
  return jet_vector(f, t0, side, order + 1);
}

LexVector quotient_image(const PiecewisePoly& f, const PrimeDescriptor& pd) {
  PrimeDescriptor p = make_descriptor(pd.kind, pd.t0, pd.k, f.domain());
  switch (p.kind) {
    case PrimeKind::Maximal: {
      Side side = compare(p.t0, f.domain().a) == std::strong_ordering::equal
                      ? Side::Right
                      : Side::Left;
      return jet_vector(f, p.t0, side, 1);
    }
    case PrimeKind::LeftK:
      return phi_hom(f, p.t0, Side::Left, *p.k);
    case PrimeKind::RightK:
      return phi_hom(f, p.t0, Side::Right, *p.k);
    default:
      throw Error(Err::UnsupportedForMinimal,
                  "the quotient by a minimal prime has no finite lexicographic model");
  }
}

PiecewisePoly synthesize_generator(const PrimeDescriptor& pd, const Domain& dom) {
  PrimeDescriptor p = make_descriptor(pd.kind, pd.t0, pd.k, dom);
  if (is_min(p.kind))
    throw Error(Err::MinimalPrimeNotPrincipal,
                "a minimal prime is not a principal ideal here");
  if (!p.t0.is_rational())
    throw Error(Err::UnsupportedAlgebraicPoint,
                "no rational-coefficient generator exists at an irrational point");
  Rational t0 = *p.t0.rational_shortcut();
  Polynomial ramp_left = Polynomial::linear(t0, Rational(-1));   // t0 - t
  Polynomial ramp_right = Polynomial::linear(-t0, Rational(1));  // t - t0
  std::vector<PwSegment> segs;
  if (p.kind == PrimeKind::Maximal) {
    if (t0 == dom.a) {
      segs.push_back({dom.a, dom.b, ramp_right});
    } else if (t0 == dom.b) {
      segs.push_back({dom.a, dom.b, ramp_left});
    } else {
      segs.push_back({dom.a, t0, ramp_left});
      segs.push_back({t0, dom.b, ramp_right});
    }
  } else if (p.kind == PrimeKind::RightK) {
    Polynomial bump = poly_pow(ramp_right, *p.k + 1);
    if (t0 == dom.a) {
      segs.push_back({dom.a, dom.b, bump});
    } else {
      segs.push_back({dom.a, t0, ramp_left});
      segs.push_back({t0, dom.b, bump});
    }
  } else {  // LeftK
    Polynomial bump = poly_pow(ramp_left, *p.k + 1);
    if (t0 == dom.b) {
      segs.push_back({dom.a, dom.b, bump});
    } else {
      segs.push_back({dom.a, t0, bump});
      segs.push_back({t0, dom.b, ramp_right});
    }
  }
  return pw_from_segments(dom, segs);
}

bool principal_membership(const PiecewisePoly& g, const PiecewisePoly& f) {
  if (!(g.domain() == f.domain()))
    throw Error(Err::DomainMismatch, "operands live on different domains");
  if (pw_is_zero(f)) return pw_is_zero(g);
  if (pw_is_zero(g)) return true;
  const Domain& d = f.domain();
  ZeroSet zf = zero_set(f);

  // At a boundary of f's zero set the facing piece of f is nonzero, so its
  // one-sided order is finite; g must vanish at least that fast (or outright).
  auto side_ok = [&](const AlgebraicNumber& z, Side s) {
    auto of = vanishing_order(f, z, s);
    if (!of) throw std::logic_error("zero-set boundary faces a zero piece");
    auto og = vanishing_order(g, z, s);
    return !og || *og >= *of;
  };

  for (const auto& z : zf.isolated) {
    if (pw_sign_at(g, z) != 0) return false;
    if (compare(z, d.a) == std::strong_ordering::greater && !side_ok(z, Side::Left))
      return false;
    if (compare(z, d.b) == std::strong_ordering::less && !side_ok(z, Side::Right))
      return false;
  }

  if (!zf.intervals.empty()) {
    std::vector<AlgebraicNumber> gb;
    gb.push_back(AlgebraicNumber::from_rational(d.a));
    for (const auto& x : g.breakpoints()) gb.push_back(x);
    gb.push_back(AlgebraicNumber::from_rational(d.b));
    for (const auto& [u, v] : zf.intervals) {
      for (size_t i = 0; i < g.pieces().size(); ++i) {
        if (g.pieces()[i].is_zero()) continue;
        // a nonzero polynomial cannot vanish on an interval, so any overlap
        // of this cell with (u, v) sinks the membership
        if (compare(gb[i], v) == std::strong_ordering::less &&
            compare(gb[i + 1], u) == std::strong_ordering::greater)
          return false;
      }
      if (compare(u, d.a) == std::strong_ordering::greater && !side_ok(u, Side::Left))
        return false;
      if (compare(v, d.b) == std::strong_ordering::less && !side_ok(v, Side::Right))
        return false;
    }
  }
  // Outside shrinking neighborhoods of its zero set |f| has a positive
  // minimum, and at each boundary the order comparison bounds |g| / |f|, so
  // a single multiplier works on all of [a, b].
  return true;
}

PiecewisePoly nonprincipal_witness(const PrimeDescriptor& pd, const PiecewisePoly& g) {
  PrimeDescriptor p = make_descriptor(pd.kind, pd.t0, pd.k, g.domain());
  if (!is_min(p.kind))
    throw Error(Err::InvalidDescriptor,
                "only minimal kinds admit a non-principality witness");
  if (!member(g, p))
    throw Error(Err::NotAMember, "the candidate generator is not in the ideal");
  ZeroSet zs = zero_set(g);
  for (const auto& [u, v] : zs.intervals) {
    if (p.kind == PrimeKind::LeftMin) {
      if (compare(u, p.t0) == std::strong_ordering::less &&
          compare(v, p.t0) != std::strong_ordering::less) {
        Rational lo = rational_strictly_between(u, p.t0);
        Rational hi =
            rational_strictly_between(AlgebraicNumber::from_rational(lo), p.t0);
        return pw_hat(g.domain(), lo, hi, Rational(1));
      }
    } else {
      if (compare(v, p.t0) == std::strong_ordering::greater &&
          compare(u, p.t0) != std::strong_ordering::greater) {
        Rational lo = rational_strictly_between(p.t0, v);
        Rational hi = rational_strictly_between(AlgebraicNumber::from_rational(lo), v);
        return pw_hat(g.domain(), lo, hi, Rational(1));
      }
    }
  }
  throw Error(Err::NoWitnessInterval, "no zero interval flanks the base point");
}

bool disjointness_prime_check(const PrimeDescriptor& pd, const PiecewisePoly& u,
                              const PiecewisePoly& v) {
  if (!(u.domain() == v.domain()))
    throw Error(Err::DomainMismatch, "operands live on different domains");
  PrimeDescriptor p = make_descriptor(pd.kind, pd.t0, pd.k, u.domain());
  if (!pw_is_zero(pw_inf(pw_abs(u), pw_abs(v))))
    throw Error(Err::NotDisjoint, "|u| ^ |v| is not zero");
  return member(u, p) || member(v, p);
}

PiecewisePoly order_dense_witness(const PrimeDescriptor& pd, const PiecewisePoly& f) {
  PrimeDescriptor p = make_descriptor(pd.kind, pd.t0, pd.k, f.domain());
  if (!pw_is_nonnegative(f) || pw_is_zero(f))
    throw Error(Err::NotPositive, "needs a nonzero nonnegative element");
  const Domain& d = f.domain();
  ZeroSet zs = zero_set(f);
  Rational halo = (d.b - d.a) / 8;
  for (int round = 0; round < 64; ++round, halo /= 2) {
    // cover the zero set and the base point by rational intervals, then look
    // for an uncovered gap; the cover shrinks onto the true blocked set,
    // which cannot be all of [a, b]
    std::vector<std::pair<Rational, Rational>> blocked;
    for (const auto& z : zs.isolated) blocked.push_back(enclosure(z, halo));
    for (const auto& [u, v] : zs.intervals)
      blocked.emplace_back(enclosure(u, halo).first, enclosure(v, halo).second);
    blocked.push_back(enclosure(p.t0, halo));
    std::sort(blocked.begin(), blocked.end());
    Rational best_lo, best_hi, cursor = d.a;
    bool found = false;
    auto consider = [&](const Rational& lo, const Rational& hi) {
      if (hi <= lo) return;
      if (!found || hi - lo > best_hi - best_lo) {
        best_lo = lo;
        best_hi = hi;
        found = true;
      }
    };
    for (const auto& [blo, bhi] : blocked) {
      consider(cursor, std::min(blo, d.b));
      cursor = std::max(cursor, bhi);
      if (cursor >= d.b) break;
    }
    consider(cursor, d.b);
    if (!found) continue;
    Rational quarter = (best_hi - best_lo) / 4;
    Rational jlo = best_lo + quarter, jhi = best_hi - quarter;
    // f has no zeros in the gap, so its minimum over [jlo, jhi] is positive;
    // halve a height until it fits underneath
    PiecewisePoly fj = pw_restrict(f, jlo, jhi);
    Rational c(1);
    for (int h = 0; h < 1024; ++h) {
      if (pw_is_zero(pw_pos(pw_sub(pw_const(c, fj.domain()), fj))))
        return pw_hat(d, jlo, jhi, c);
      c /= 2;
    }
  }
  throw Error(Err::NoWitnessInterval, "could not separate a positive region");
}

SpectrumReport primes_containing(const PiecewisePoly& f) {
  if (pw_is_zero(f))
    throw Error(Err::ZeroFunction, "every prime contains the zero function");
  const Domain& d = f.domain();
  ZeroSet zs = zero_set(f);
  SpectrumReport r;

  auto outward = [&](const AlgebraicNumber& z, Side s) {
    auto o = vanishing_order(f, z, s);
    if (!o) throw std::logic_error("zero-set boundary faces a zero piece");
    PrimeKind kk = s == Side::Left ? PrimeKind::LeftK : PrimeKind::RightK;
    for (int k = 1; k + 1 <= *o; ++k)
      r.descriptors.push_back(make_descriptor(kk, z, k, d));
  };

  for (const auto& z : zs.isolated) {
    r.descriptors.push_back(make_descriptor(PrimeKind::Maximal, z, std::nullopt, d));
    if (compare(z, d.a) == std::strong_ordering::greater) outward(z, Side::Left);
    if (compare(z, d.b) == std::strong_ordering::less) outward(z, Side::Right);
  }

  for (const auto& [u, v] : zs.intervals) {
    r.maximal_intervals.emplace_back(u, v);
    // inward: f vanishes identically right of u and left of v, so the whole
    // one-sided tower there contains f
    r.descriptors.push_back(make_descriptor(PrimeKind::RightMin, u, std::nullopt, d));
    r.descriptors.push_back(make_descriptor(PrimeKind::LeftMin, v, std::nullopt, d));
    if (d.degree_cap) {
      for (int k = 1; k < *d.degree_cap; ++k) {
        r.descriptors.push_back(make_descriptor(PrimeKind::RightK, u, k, d));
        r.descriptors.push_back(make_descriptor(PrimeKind::LeftK, v, k, d));
      }
    } else {
      r.k_families.push_back({Side::Right, u});
      r.k_families.push_back({Side::Left, v});
    }
    // outward: finite-order flanks
    if (compare(u, d.a) == std::strong_ordering::greater) outward(u, Side::Left);
    if (compare(v, d.b) == std::strong_ordering::less) outward(v, Side::Right);
  }

  std::sort(r.descriptors.begin(), r.descriptors.end(),
            [](const PrimeDescriptor& x, const PrimeDescriptor& y) {
              auto c = compare(x.t0, y.t0);
              if (c != std::strong_ordering::equal)
                return c == std::strong_ordering::less;
              if (kind_rank(x.kind) != kind_rank(y.kind))
                return kind_rank(x.kind) < kind_rank(y.kind);
              return x.k.value_or(0) < y.k.value_or(0);
            });
  std::sort(r.k_families.begin(), r.k_families.end(),
            [](const KFamily& x, const KFamily& y) {
              auto c = compare(x.t0, y.t0);
              if (c != std::strong_ordering::equal)
                return c == std::strong_ordering::less;
              return x.side == Side::Left && y.side == Side::Right;
            });
  return r;
}

}  // namespace rsl
