#include "rsl/polynomial.hpp"

#include <cassert>
#include <stdexcept>

namespace rsl {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::variable() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) {
  return Polynomial(std::vector<Rational>{c0, c1});
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(Int(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial();
  std::vector<Rational> out(coeffs_);
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    bool unit = a == 1 && i > 0;
    if (!unit) out += rsl::str(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

PolyDivMod poly_divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("poly_divmod: zero divisor");
  std::vector<Rational> r(num.coeffs());
  int dd = den.degree();
  Rational lead = den.leading();
  std::vector<Rational> q;
  int rd = static_cast<int>(r.size()) - 1;
  if (rd >= dd) q.assign(rd - dd + 1, Rational(0));
  while (rd >= dd) {
    while (rd >= 0 && r[rd] == 0) --rd;
    if (rd < dd) break;
    Rational f = r[rd] / lead;
    q[rd - dd] = f;
    for (int i = 0; i <= dd; ++i) r[rd - dd + i] -= f * den.coeff(i);
    r[rd] = 0;
    --rd;
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial poly_pow(const Polynomial& p, unsigned e) {
  Polynomial acc = Polynomial::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Int den_lcm(1);
  for (const auto& c : p.coeffs())
    if (c != 0) den_lcm = lcm(den_lcm, denominator(c));
  Int num_gcd(0);
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    Int n = numerator(c) * (den_lcm / denominator(c));
    num_gcd = gcd(num_gcd, abs(n));
  }
  Rational factor(den_lcm, num_gcd);
  return p.scaled(factor);
}

Polynomial positive_leading(const Polynomial& p) {
  return p.leading() < 0 ? -p : p;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).rem;
    a = std::move(b);
    b = primitive_part(r);
  }
  return positive_leading(a);
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return positive_leading(primitive_part(p));
  auto [q, r] = poly_divmod(p, g);
  assert(r.is_zero());
  return positive_leading(primitive_part(q));
}

Polynomial divide_out_root(const Polynomial& p, const Rational& r) {
  auto [q, rem] = poly_divmod(p, Polynomial::linear(-r, Rational(1)));
  assert(rem.is_zero());
  (void)rem;
  return q;
}

}  // namespace rsl
