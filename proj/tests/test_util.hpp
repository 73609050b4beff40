// Shared helpers for the test suites: a small deterministic generator for
// rationals, polynomials, and continuous piecewise functions.  Continuity is
// arranged by construction (each piece is shifted to match the previous piece
// at the seam), so generated functions are valid without rejection sampling.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rsl/errors.hpp"
#include "rsl/piecewise.hpp"

namespace rsltest {

using rsl::Domain;
using rsl::PiecewisePoly;
using rsl::Polynomial;
using rsl::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [lo, hi], inclusive.
  int in(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool flip() { return (eng_() & 1) != 0; }

  Rational rational(int max_num = 8, int max_den = 8) {
    return Rational(in(-max_num, max_num), in(1, max_den));
  }

  Rational positive_rational(int max_num = 8, int max_den = 8) {
    return Rational(in(1, max_num), in(1, max_den));
  }

  Polynomial poly(int max_deg, int max_coeff = 6) {
    int deg = in(0, max_deg);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i)
      c.push_back(Rational(in(-max_coeff, max_coeff), in(1, 4)));
    return Polynomial(std::move(c));
  }

  // Distinct interior breakpoints for a domain, as exact rationals on a fine
  // grid strictly between the endpoints.
  std::vector<Rational> breakpoints(const Domain& dom, int count) {
    std::set<Rational> picks;
    const int grid = 64;
    int guard = 0;
    while (static_cast<int>(picks.size()) < count && guard++ < 200) {
      int num = in(1, grid - 1);
      picks.insert(dom.a + (dom.b - dom.a) * Rational(num, grid));
    }
    return {picks.begin(), picks.end()};
  }

  // A continuous piecewise polynomial with up to `max_pieces` pieces of degree
  // at most `max_deg`.  Pieces after the first get a constant adjustment so
  // values agree at each seam.
  PiecewisePoly continuous_pw(const Domain& dom, int max_pieces, int max_deg) {
    int cap_deg = dom.degree_cap ? std::min(max_deg, *dom.degree_cap) : max_deg;
    int count = in(1, max_pieces);
    auto cuts = breakpoints(dom, count - 1);
    std::vector<rsl::PwSegment> segs;
    Rational lo = dom.a;
    Polynomial prev = poly(cap_deg);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      Rational hi = cuts[i];
      segs.push_back({lo, hi, prev});
      Polynomial next = poly(cap_deg);
      next = next + Polynomial::constant(prev(hi) - next(hi));
      prev = next;
      lo = hi;
    }
    segs.push_back({lo, dom.b, prev});
    return rsl::pw_from_segments(dom, segs);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// A disjoint nonnegative pair: the positive and negative parts of a random
// function.  At least one of them may be zero if the function is one-signed.
inline std::pair<PiecewisePoly, PiecewisePoly> disjoint_pair(Rng& rng,
                                                             const Domain& dom) {
  PiecewisePoly h = rng.continuous_pw(dom, 4, 4);
  return {rsl::pw_pos(h), rsl::pw_neg(h)};
}

}  // namespace rsltest

using rsltest::Rng;
