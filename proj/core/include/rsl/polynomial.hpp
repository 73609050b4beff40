#pragma once

#include <string>
#include <vector>

#include "rsl/rational.hpp"

namespace rsl {

// Univariate polynomial over Q with dense coefficients; coeffs()[i] is the
// coefficient of t^i. The zero polynomial stores no coefficients; otherwise
// the leading coefficient is nonzero.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& c);
  static Polynomial variable();                                 // t
  static Polynomial linear(const Rational& c0, const Rational& c1);  // c0 + c1*t

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
  }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial&) const = default;

  // Human-readable form for diagnostics, e.g. "1/4 - t + t^2".
  std::string str() const;

private:
  std::vector<Rational> coeffs_;
  void trim();
};

struct PolyDivMod {
  Polynomial quot, rem;
};

// Long division over Q; den must be nonzero.
PolyDivMod poly_divmod(const Polynomial& num, const Polynomial& den);

Polynomial poly_pow(const Polynomial& p, unsigned e);

// Integer-coefficient scalar multiple of p with content 1; the sign of the
// leading coefficient is preserved. Zero maps to zero.
Polynomial primitive_part(const Polynomial& p);

Polynomial positive_leading(const Polynomial& p);

// Primitive integer gcd with positive leading coefficient; gcd(0,0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// p / gcd(p, p'), primitive with positive leading coefficient: same distinct
// roots as p, all simple.
Polynomial squarefree_part(const Polynomial& p);

// Exact division by (t - r); asserts that r is a root.
Polynomial divide_out_root(const Polynomial& p, const Rational& r);

}  // namespace rsl
