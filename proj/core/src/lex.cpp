#include "rsl/lex.hpp"

namespace rsl {

std::strong_ordering lex_compare(const LexVector& x, const LexVector& y) {
  size_t n = std::max(x.size(), y.size());
  static const ExactScalar zero{};
  for (size_t i = 0; i < n; ++i) {
    const ExactScalar& xi = i < x.size() ? x[i] : zero;
    const ExactScalar& yi = i < y.size() ? y[i] : zero;
    auto c = compare(xi, yi);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

bool lex_is_zero(const LexVector& x) {
  for (const auto& e : x)
    if (!e.is_zero()) return false;
  return true;
}

LexVector lex_negate(const LexVector& x) {
  LexVector out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back(-e);
  return out;
}

LexVector lex_abs(const LexVector& x) {
  for (const auto& e : x) {
    int s = e.sign();
    if (s > 0) return x;
    if (s < 0) return lex_negate(x);
  }
  return x;  // zero vector
}

}  // namespace rsl
