#include "rsl/algebraic.hpp"

#include <cassert>
#include <stdexcept>

#include "rsl/errors.hpp"

namespace rsl {

struct AlgebraicDetail {
  // Trusted constructor: `defining` already canonical (squarefree, primitive,
  // positive leading), interval already isolating with non-root endpoints.
  static AlgebraicNumber raw(Polynomial defining, Rational lo, Rational hi,
                             std::optional<Rational> shortcut) {
    AlgebraicNumber a;
    a.defining_ = std::move(defining);
    a.lo_ = std::move(lo);
    a.hi_ = std::move(hi);
    a.shortcut_ = std::move(shortcut);
    return a;
  }
};

namespace {

// Canonical Sturm chain (remainders normalized to primitive integer form;
// positive scaling preserves the sign pattern).
class SturmChain {
public:
  explicit SturmChain(const Polynomial& p) {
    Polynomial a = primitive_part(p);
    seq_.push_back(a);
    Polynomial b = primitive_part(a.derivative());
    if (!b.is_zero()) {
      seq_.push_back(b);
      while (true) {
        const Polynomial& s0 = seq_[seq_.size() - 2];
        const Polynomial& s1 = seq_[seq_.size() - 1];
        Polynomial r = poly_divmod(s0, s1).rem;
        if (r.is_zero()) break;
        seq_.push_back(primitive_part(-r));
      }
    }
  }

  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& q : seq_) {
      int s = sign_of(q(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Distinct roots in the open interval; requires non-root endpoints.
  int count_open(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) return 0;
    return variations(lo) - variations(hi);
  }

private:
  std::vector<Polynomial> seq_;
};

// Detect whether the unique root of canonical squarefree `q` in (lo, hi) is
// rational, without factoring: a rational root p/d in lowest terms has
// d | leading(q), and two rationals with denominators <= L differ by at least
// 1/L^2, so once the interval is narrower than that the minimal-denominator
// rational inside is the only candidate.
std::optional<Rational> detect_rational_root(const Polynomial& q, Rational& lo, Rational& hi) {
  Int lead = abs(numerator(q.leading()));
  Rational gap = Rational(1) / Rational(lead * lead + 1);
  int sign_lo = sign_of(q(lo));
  while (hi - lo >= gap) {
    Rational mid = (lo + hi) / 2;
    int sm = sign_of(q(mid));
    if (sm == 0) {
      // landed exactly on the root
      lo = mid - gap / 2;
      hi = mid + gap / 2;
      return mid;
    }
    (sm == sign_lo ? lo : hi) = mid;
  }
  Rational cand = simplest_in_open(lo, hi);
  if (q(cand) == 0) return cand;
  return std::nullopt;
}

AlgebraicNumber finish_root(const Polynomial& sqfree, Rational lo, Rational hi) {
  std::optional<Rational> shortcut = detect_rational_root(sqfree, lo, hi);
  if (shortcut) return AlgebraicNumber::from_rational(*shortcut);
  return AlgebraicDetail::raw(sqfree, std::move(lo), std::move(hi), std::nullopt);
}

void isolate_rec(const Polynomial& q, const SturmChain& chain, const Rational& lo,
                 const Rational& hi, std::vector<AlgebraicNumber>& out,
                 std::vector<Rational>& pending_exact) {
  int n = chain.count_open(lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back(finish_root(q, lo, hi));
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (q(mid) == 0) {
    // rational root exactly at the midpoint: remember it and let the caller
    // divide it out and restart, so recursion endpoints stay non-roots
    pending_exact.push_back(mid);
    return;
  }
  isolate_rec(q, chain, lo, mid, out, pending_exact);
  isolate_rec(q, chain, mid, hi, out, pending_exact);
}

}  // namespace

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  Polynomial defining =
      positive_leading(primitive_part(Polynomial::linear(-r, Rational(1))));
  return AlgebraicDetail::raw(std::move(defining), r - 1, r + 1, r);
}

AlgebraicNumber AlgebraicNumber::make(const Polynomial& defining, const Rational& lo,
                                      const Rational& hi) {
  if (defining.is_zero() || defining.degree() < 1)
    throw Error(Err::SchemaError, "defining polynomial must have positive degree");
  if (!(lo < hi)) throw Error(Err::SchemaError, "isolating interval is empty");
  Polynomial q = squarefree_part(defining);
  if (q(lo) == 0 || q(hi) == 0)
    throw Error(Err::SchemaError, "isolating interval endpoint is a root");
  SturmChain chain(q);
  int n = chain.count_open(lo, hi);
  if (n != 1)
    throw Error(Err::SchemaError,
                "isolating interval contains " + std::to_string(n) + " roots, expected 1");
  Rational l = lo, h = hi;
  return finish_root(q, std::move(l), std::move(h));
}

int sturm_root_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
  if (!(lo < hi)) return 0;
  if (p(lo) == 0 || p(hi) == 0)
    throw Error(Err::EndpointIsRoot,
                "polynomial vanishes at interval endpoint " +
                    rsl::str(p(lo) == 0 ? lo : hi));
  return SturmChain(p).count_open(lo, hi);
}

std::vector<AlgebraicNumber> isolate_roots(const Polynomial& p, const Rational& lo,
                                           const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (lo > hi) throw std::invalid_argument("isolate_roots: empty interval");
  std::vector<AlgebraicNumber> out;
  Polynomial q = squarefree_part(p);
  if (q.degree() < 1) return out;
  if (q(lo) == 0) {
    out.push_back(AlgebraicNumber::from_rational(lo));
    q = divide_out_root(q, lo);
  }
  if (hi != lo && q(hi) == 0) {
    out.push_back(AlgebraicNumber::from_rational(hi));
    q = divide_out_root(q, hi);
  }
  if (lo < hi) {
    // A bisection midpoint may land exactly on a rational root; divide such
    // roots out and redo the pass so recursion endpoints stay non-roots. The
    // degree drops each retry, so this terminates.
    while (q.degree() >= 1) {
      SturmChain chain(q);
      std::vector<Rational> pending;
      std::vector<AlgebraicNumber> pass;
      isolate_rec(q, chain, lo, hi, pass, pending);
      if (pending.empty()) {
        out.insert(out.end(), pass.begin(), pass.end());
        break;
      }
      for (const Rational& r : pending) {
        out.push_back(AlgebraicNumber::from_rational(r));
        q = divide_out_root(q, r);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
              return compare(a, b) == std::strong_ordering::less;
            });
  return out;
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine: width must be positive");
  if (a.is_rational()) {
    const Rational& r = *a.rational_shortcut();
    return AlgebraicDetail::raw(a.defining(), r - width / 2, r + width / 2, r);
  }
  Rational lo = a.lo(), hi = a.hi();
  const Polynomial& d = a.defining();
  int sign_lo = sign_of(d(lo));
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    // mid cannot be a root: the only root in (lo, hi) is irrational
    (sign_of(d(mid)) == sign_lo ? lo : hi) = mid;
  }
  return AlgebraicDetail::raw(d, std::move(lo), std::move(hi), a.rational_shortcut());
}

int sign_at(const Polynomial& p, const AlgebraicNumber& a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return sign_of(p(*a.rational_shortcut()));
  Polynomial g = poly_gcd(p, a.defining());
  if (g.degree() >= 1) {
    // roots of g inside the isolating interval can only be the point itself;
    // endpoints are non-roots of defining, hence of g
    if (SturmChain(g).count_open(a.lo(), a.hi()) == 1) return 0;
  }
  // p has no root at the point; shrink until the interval is root-free for p
  Rational lo = a.lo(), hi = a.hi();
  const Polynomial& d = a.defining();
  int sign_lo = sign_of(d(lo));
  SturmChain pchain(p);
  while (true) {
    int slo = sign_of(p(lo)), shi = sign_of(p(hi));
    if (slo != 0 && shi != 0 && pchain.count_open(lo, hi) == 0) return slo;
    Rational mid = (lo + hi) / 2;
    (sign_of(d(mid)) == sign_lo ? lo : hi) = mid;
  }
}

std::strong_ordering compare(const AlgebraicNumber& a, const Rational& r) {
  if (a.is_rational()) {
    const Rational& v = *a.rational_shortcut();
    return v < r    ? std::strong_ordering::less
           : v == r ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }
  // sign of (a - r)
  int s = sign_at(Polynomial::linear(-r, Rational(1)), a);
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) {
    const Rational &x = *a.rational_shortcut(), &y = *b.rational_shortcut();
    return x < y    ? std::strong_ordering::less
           : x == y ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }
  if (a.is_rational()) {
    auto c = compare(b, *a.rational_shortcut());
    return c == std::strong_ordering::less ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
  }
  if (b.is_rational()) return compare(a, *b.rational_shortcut());

  Polynomial g = poly_gcd(a.defining(), b.defining());
  std::optional<SturmChain> gchain;
  if (g.degree() >= 1) gchain.emplace(g);

  Rational alo = a.lo(), ahi = a.hi(), blo = b.lo(), bhi = b.hi();
  const Polynomial &da = a.defining(), &db = b.defining();
  int sa = sign_of(da(alo)), sb = sign_of(db(blo));
  while (true) {
    if (ahi <= blo) return std::strong_ordering::less;
    if (bhi <= alo) return std::strong_ordering::greater;
    if (gchain) {
      Rational jlo = std::max(alo, blo), jhi = std::min(ahi, bhi);
      // overlap endpoints are endpoints of one of the intervals, never roots
      if (jlo < jhi && gchain->count_open(jlo, jhi) == 1)
        return std::strong_ordering::equal;
    }
    Rational amid = (alo + ahi) / 2;
    (sign_of(da(amid)) == sa ? alo : ahi) = amid;
    Rational bmid = (blo + bhi) / 2;
    (sign_of(db(bmid)) == sb ? blo : bhi) = bmid;
  }
}

std::pair<Rational, Rational> enclosure(const AlgebraicNumber& a, const Rational& width) {
  if (a.is_rational()) {
    const Rational& r = *a.rational_shortcut();
    return {r, r};
  }
  AlgebraicNumber t = refine(a, width);
  return {t.lo(), t.hi()};
}

Rational rational_strictly_between(const AlgebraicNumber& u, const AlgebraicNumber& v) {
  assert(compare(u, v) == std::strong_ordering::less);
  AlgebraicNumber a = u, b = v;
  auto upper = [](const AlgebraicNumber& x) {
    return x.is_rational() ? *x.rational_shortcut() : x.hi();
  };
  auto lower = [](const AlgebraicNumber& x) {
    return x.is_rational() ? *x.rational_shortcut() : x.lo();
  };
  while (true) {
    Rational au = upper(a), bl = lower(b);
    if (au < bl) return (au + bl) / 2;
    if (au == bl && !a.is_rational() && !b.is_rational()) return au;
    Rational wa = a.hi() - a.lo(), wb = b.hi() - b.lo();
    a = refine(a, wa / 4);
    b = refine(b, wb / 4);
  }
}

ExactScalar::ExactScalar(const Polynomial& p, const AlgebraicNumber& at) : rat_(0) {
  if (at.is_rational()) {
    rat_ = p(*at.rational_shortcut());
    return;
  }
  // Reduce modulo the defining polynomial; the value is unchanged and the
  // scalar collapses to a rational whenever the remainder is constant.
  Polynomial r = p.degree() < at.defining().degree() ? p : poly_divmod(p, at.defining()).rem;
  if (r.degree() <= 0)
    rat_ = r.coeff(0);
  else
    alg_.emplace(std::move(r), at);
}

int ExactScalar::sign() const {
  if (is_rational()) return sign_of(rat_);
  return sign_at(alg_->first, alg_->second);
}

ExactScalar ExactScalar::operator-() const {
  if (is_rational()) return ExactScalar(Rational(-rat_));
  return ExactScalar(-alg_->first, alg_->second);
}

std::pair<Rational, Rational> ExactScalar::enclosure(const Rational& width) const {
  if (is_rational()) return {rat_, rat_};
  // interval Horner, refining the anchor until the value interval is narrow
  const Polynomial& p = alg_->first;
  AlgebraicNumber at = alg_->second;
  Rational w = at.hi() - at.lo();
  while (true) {
    Rational lo(0), hi(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
      // [lo,hi] * [at.lo, at.hi] + c
      Rational c1 = lo * at.lo(), c2 = lo * at.hi(), c3 = hi * at.lo(), c4 = hi * at.hi();
      lo = std::min(std::min(c1, c2), std::min(c3, c4)) + *it;
      hi = std::max(std::max(c1, c2), std::max(c3, c4)) + *it;
    }
    if (hi - lo <= width) return {lo, hi};
    w = w / 4;
    at = refine(at, w);
  }
}

std::strong_ordering compare(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_rational() && y.is_rational()) {
    const Rational &a = x.rational(), &b = y.rational();
    return a < b    ? std::strong_ordering::less
           : a == b ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }
  if (x.is_rational()) {
    int s = sign_at(y.poly() - Polynomial::constant(x.rational()), y.anchor());
    return s > 0   ? std::strong_ordering::less
           : s < 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }
  if (y.is_rational()) {
    int s = sign_at(x.poly() - Polynomial::constant(y.rational()), x.anchor());
    return s < 0   ? std::strong_ordering::less
           : s > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }
  if (compare(x.anchor(), y.anchor()) != std::strong_ordering::equal)
    throw std::logic_error("ExactScalar compare: distinct anchors");
  int s = sign_at(x.poly() - y.poly(), x.anchor());
  return s < 0   ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

}  // namespace rsl
