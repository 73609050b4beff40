#pragma once

#include <compare>
#include <vector>

#include "rsl/algebraic.hpp"

namespace rsl {

// Finite vector ordered lexicographically from the front. Entries are exact
// scalars anchored at a common algebraic point (or plain rationals), so
// comparisons stay decidable.
using LexVector = std::vector<ExactScalar>;

// Lexicographic comparison. Shorter vectors are padded with zeros on the
// right, so (1, 0) and (1,) compare equal.
std::strong_ordering lex_compare(const LexVector& x, const LexVector& y);

bool lex_is_zero(const LexVector& x);

// Absolute value in the lexicographic order: x when x >= 0, -x otherwise.
// Note this flips every entry or none; it is not entrywise.
LexVector lex_abs(const LexVector& x);

LexVector lex_negate(const LexVector& x);

}  // namespace rsl
