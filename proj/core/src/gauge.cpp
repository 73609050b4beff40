#include "rsl/errors.hpp"
#include "rsl/piecewise.hpp"
#include "rsl/spectrum.hpp"

namespace rsl {

std::pair<Rational, Rational> gauge_norm(const PiecewisePoly& g, const PiecewisePoly& f,
                                         const Rational& tol) {
  if (!(g.domain() == f.domain()))
    throw Error(Err::DomainMismatch, "operands live on different domains");
  if (tol <= 0) throw Error(Err::SchemaError, "tolerance must be positive");
  if (!pw_is_nonnegative(f) || pw_is_zero(f))
    throw Error(Err::NotPositive, "the gauge base must be nonnegative and nonzero");
  if (!principal_membership(g, f))
    throw Error(Err::NotInIdeal, "no multiple of the base dominates |g|");
  PiecewisePoly G = pw_abs(g);
  if (pw_is_zero(G)) return {Rational(0), Rational(0)};
  auto dominated = [&](const Rational& c) {
    return pw_is_zero(pw_pos(pw_sub(G, pw_scale(c, f))));
  };
  Rational hi(1);
  while (!dominated(hi)) hi *= 2;  // terminates: membership granted a multiplier
  Rational lo(0);
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (dominated(mid))
      hi = mid;
    else
      lo = mid;
  }
  // the infimum lies in (lo, hi] and |g| <= hi * f holds exactly
  return {lo, hi};
}

}  // namespace rsl
