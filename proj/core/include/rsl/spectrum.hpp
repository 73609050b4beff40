#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsl/lex.hpp"
#include "rsl/piecewise.hpp"

namespace rsl {

enum class PrimeKind { Maximal, LeftK, RightK, LeftMin, RightMin };

// Short tags used in descriptor strings and JSON: M, L, R, Lmin, Rmin.
const char* kind_tag(PrimeKind kind);

// A prime ideal of the lattice over a fixed domain. Membership by kind:
//   Maximal       f(t0) = 0
//   LeftK  (k>=1) f(t0) = 0 and the first k left derivatives vanish at t0
//   RightK (k>=1) mirror image on the right
//   LeftMin       f vanishes identically on a left neighborhood of t0
//   RightMin      mirror image on the right
// The one-sided kinds need the corresponding neighborhood to exist, so
// LeftK/LeftMin require t0 > a and RightK/RightMin require t0 < b.
struct PrimeDescriptor {
  PrimeKind kind;
  AlgebraicNumber t0;
  std::optional<int> k;  // present exactly for LeftK / RightK
  Domain domain;
};

bool descriptor_equal(const PrimeDescriptor& p, const PrimeDescriptor& q);

// Validating factory. Throws Error(OutOfDomain) for t0 outside [a, b],
// Error(SideNotAdmissible) for a one-sided kind at the wrong endpoint and
// Error(InvalidDescriptor) for a bad k. Under a degree cap n, LeftK/RightK
// with k = n normalizes to the minimal kind: forcing the value and n
// one-sided derivatives of a piece of degree <= n to vanish pins the whole
// piece to zero.
PrimeDescriptor make_descriptor(PrimeKind kind, AlgebraicNumber t0,
                                std::optional<int> k, const Domain& dom);

PrimeDescriptor maximal_at(AlgebraicNumber t0, const Domain& dom);
PrimeDescriptor left_k(AlgebraicNumber t0, int k, const Domain& dom);
PrimeDescriptor right_k(AlgebraicNumber t0, int k, const Domain& dom);
PrimeDescriptor left_min(AlgebraicNumber t0, const Domain& dom);
PrimeDescriptor right_min(AlgebraicNumber t0, const Domain& dom);

// Compact text form "M:1/2", "L:1/2:2", "Rmin:0". Only rational base points
// have one (Error(UnsupportedAlgebraicPoint) otherwise).
std::string format_descriptor(const PrimeDescriptor& p);

// Printable form for any descriptor; algebraic base points are spelled out.
std::string describe_descriptor(const PrimeDescriptor& p);

// Inverse of format_descriptor, validated against dom
// (Error(InvalidDescriptor) on malformed input).
PrimeDescriptor parse_descriptor(const std::string& s, const Domain& dom);

bool member(const PiecewisePoly& f, const PrimeDescriptor& p);

// Set containment: every member of inner is a member of outer. Primes at
// distinct base points never compare; at one point the order is
// SideMin < ... < Side^{k+1} < Side^k < ... < Side^1 < Maximal per side.
bool contains(const PrimeDescriptor& outer, const PrimeDescriptor& inner);

struct Chain {
  std::vector<PrimeDescriptor> descriptors;  // strictly ascending, ends maximal
  bool truncated;  // true when omitted members sit between the first two
};

// The full chain from p up to the maximal ideal at the same point. Without a
// degree cap a minimal prime has infinitely many successors, so only the
// intermediate orders cutoff down to 1 are emitted between the bottom element
// and the maximal ideal, with truncated = true.
Chain chain_above(const PrimeDescriptor& p, const Domain& dom, int cutoff = 8);

// Longest possible chain of strict inclusions between primes at one point:
// the degree cap when there is one, nullopt (unbounded) otherwise.
std::optional<int> max_chain_length(const Domain& dom);

// A concrete chain with exactly `length` strict inclusions, based at the
// rational point t0 (t0 > a; the chain runs through left kinds). Capped
// domains refuse length > cap (Error(SchemaError)).
Chain witness_chain(const Domain& dom, const Rational& t0, int length);

// One-sided jet of f at t0 as a lexicographically ordered vector. Entry j
// carries the j-th one-sided derivative; on the left side odd entries are
// negated so that the sign of the vector matches the sign of f just left of
// t0 (df/dt seen through t -> t0 - t flips odd orders). psi_hom emits the
// whole jet of the governing piece; phi_hom pads or cuts to order+1 entries.
// Both are linear and turn |f| into the lexicographic absolute value.
LexVector psi_hom(const PiecewisePoly& f, const AlgebraicNumber& t0, Side side);
LexVector phi_hom(const PiecewisePoly& f, const AlgebraicNumber& t0, Side side, int order);

// Image of f in the quotient by p, realized inside a lexicographic vector:
// one entry for Maximal, k+1 entries for LeftK/RightK. The quotient by a
// minimal prime has no finite lexicographic model
// (Error(UnsupportedForMinimal)).
LexVector quotient_image(const PiecewisePoly& f, const PrimeDescriptor& p);

// A nonnegative element generating p as a principal ideal: |t - t0| for a
// maximal prime, a one-sided (k+1)-st power glued to a linear ramp for the
// intermediate kinds. Minimal primes are not principal
// (Error(MinimalPrimeNotPrincipal)); irrational base points have no
// rational-coefficient generator (Error(UnsupportedAlgebraicPoint)).
PiecewisePoly synthesize_generator(const PrimeDescriptor& p, const Domain& dom);

// Exact decision of g in the principal ideal of f, i.e. |g| <= c|f| for some
// rational c: f's zero set must lie inside g's and at every boundary of it
// with a finite one-sided vanishing order g's order must be at least f's.
bool principal_membership(const PiecewisePoly& g, const PiecewisePoly& f);

// For a minimal prime p and a candidate generator g in p, an element of p
// outside the principal ideal of g: a tent supported where g vanishes on the
// minimal side. Throws Error(NotAMember) when g is not in p and
// Error(InvalidDescriptor) for non-minimal kinds.
PiecewisePoly nonprincipal_witness(const PrimeDescriptor& p, const PiecewisePoly& g);

// Checks the prime property on a disjoint pair: |u| ^ |v| = 0 must hold
// (Error(NotDisjoint) otherwise); returns member(u, p) || member(v, p).
bool disjointness_prime_check(const PrimeDescriptor& p, const PiecewisePoly& u,
                              const PiecewisePoly& v);

// For 0 <= f, f != 0 (Error(NotPositive) otherwise), a tent h with
// 0 < h <= f vanishing on a neighborhood of p's base point, so h lies in
// every prime at that point: the primes here are order-dense ideals.
PiecewisePoly order_dense_witness(const PrimeDescriptor& p, const PiecewisePoly& f);

struct KFamily {
  Side side;
  AlgebraicNumber t0;
};

// Every prime containing f, grouped. descriptors lists the finitely many
// primes pinned at isolated zeros and at boundaries of zero intervals;
// maximal_intervals reports one maximal prime per point of each zero
// interval; k_families stands for a whole uncapped family Side^k, k >= 1,
// at a zero-interval boundary (capped domains expand it into descriptors).
struct SpectrumReport {
  std::vector<PrimeDescriptor> descriptors;
  std::vector<KFamily> k_families;
  std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>> maximal_intervals;
};

// Throws Error(ZeroFunction) for f = 0 (every prime contains it).
SpectrumReport primes_containing(const PiecewisePoly& f);

}  // namespace rsl
