#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rsl/rational.hpp"

namespace rsl {

// Finitely supported sequences over a finite index set: vectors in R^m under
// the coordinatewise order. Every structural question about ideals collapses
// to combinatorics of coordinate sets here, which is the foil to the
// piecewise world where it does not.
using FinVec = std::vector<Rational>;

FinVec fv_abs(const FinVec& x);
FinVec fv_inf(const FinVec& x, const FinVec& y);
bool fv_is_zero(const FinVec& x);
FinVec unit_vec(int dim, int i);  // e_i, 1-based

// The ideal of vectors supported inside a fixed coordinate set.
struct CoordIdeal {
  int dim;
  std::vector<int> support;  // 1-based, strictly ascending
};

CoordIdeal make_coord_ideal(int dim, std::vector<int> support);

bool in_ideal(const FinVec& x, const CoordIdeal& ideal);

// Proper coordinate ideals are prime exactly when the support misses a
// single coordinate, and then they are maximal and minimal at once: the
// spectrum is flat, with no room for chains.
enum class IdealKind { Whole, Maximal, PrimeNonMaximal, NonPrime };

const char* ideal_kind_name(IdealKind k);

struct IdealClass {
  IdealKind kind;
  bool proper;
  bool prime;
  bool maximal;
  bool minimal_prime;
};

IdealClass classify_ideal(const CoordIdeal& ideal);

// For a proper non-prime ideal, a disjoint pair with neither member inside:
// unit vectors on two missing coordinates. nullopt when the ideal is prime
// or improper.
std::optional<std::pair<FinVec, FinVec>> nonprime_witness(const CoordIdeal& ideal);

// The m prime coordinate ideals of R^m, one per dropped coordinate.
std::vector<CoordIdeal> enumerate_primes(int m);

// All 2^m coordinate ideals, each exercised against a seeded sample of
// dominated vectors as a solidity self-check. m is capped at 16.
std::vector<CoordIdeal> enumerate_ideals(int m, std::uint64_t seed);

// Atoms are the vectors with exactly one strictly positive entry; returns
// that entry's 1-based coordinate, or none if the vector is not an atom.
std::optional<int> atom_check(const FinVec& x);

// The ascending chain J_1 < J_2 < ... < J_m over initial coordinate segments;
// it stabilizes at the top, and no ascending chain of ideals here can do
// otherwise.
std::vector<CoordIdeal> noetherian_chain_demo(int m);

// The span of a single vector with two or more nonzero entries is not solid:
// returns a coordinate shadow x with |x| <= |v| lying outside the span.
// nullopt when v has at most one nonzero entry.
std::optional<FinVec> non_coordinate_solidity_witness(const FinVec& v);

}  // namespace rsl
