#include "rsl/atomic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rsl/errors.hpp"

namespace rsl {

FinVec fv_abs(const FinVec& x) {
  FinVec r = x;
  for (auto& e : r)
    if (e < 0) e = -e;
  return r;
}

FinVec fv_inf(const FinVec& x, const FinVec& y) {
  if (x.size() != y.size()) throw Error(Err::DomainMismatch, "dimension mismatch");
  FinVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = std::min(x[i], y[i]);
  return r;
}

bool fv_is_zero(const FinVec& x) {
  for (const auto& e : x)
    if (e != 0) return false;
  return true;
}

FinVec unit_vec(int dim, int i) {
  if (dim < 1 || i < 1 || i > dim)
    throw Error(Err::SchemaError, "unit vector index out of range");
  FinVec r(dim, Rational(0));
  r[i - 1] = 1;
  return r;
}

CoordIdeal make_coord_ideal(int dim, std::vector<int> support) {
  if (dim < 1) throw Error(Err::SchemaError, "dimension must be positive");
  std::sort(support.begin(), support.end());
  for (size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 1 || support[i] > dim)
      throw Error(Err::SchemaError, "support index out of range");
    if (i > 0 && support[i] == support[i - 1])
      throw Error(Err::SchemaError, "duplicate support index");
  }
  return CoordIdeal{dim, std::move(support)};
}

bool in_ideal(const FinVec& x, const CoordIdeal& ideal) {
  if (static_cast<int>(x.size()) != ideal.dim)
    throw Error(Err::DomainMismatch, "dimension mismatch");
  size_t s = 0;
  for (int i = 1; i <= ideal.dim; ++i) {
    if (s < ideal.support.size() && ideal.support[s] == i)
      ++s;
    else if (x[i - 1] != 0)
      return false;
  }
  return true;
}

const char* ideal_kind_name(IdealKind k) {
  switch (k) {
    case IdealKind::Whole: return "Whole";
    case IdealKind::Maximal: return "Maximal";
    case IdealKind::PrimeNonMaximal: return "PrimeNonMaximal";
    case IdealKind::NonPrime: return "NonPrime";
  }
  return "?";
}

IdealClass classify_ideal(const CoordIdeal& ideal) {
  int missing = ideal.dim - static_cast<int>(ideal.support.size());
  bool prime = missing == 1;
  // Coordinate ideals admit no prime that is not maximal: prime needs exactly
  // one missing coordinate, and that ideal is already maximal.
  IdealKind kind = missing == 0  ? IdealKind::Whole
                   : missing == 1 ? IdealKind::Maximal
                                  : IdealKind::NonPrime;
  return IdealClass{kind, missing >= 1, prime, prime, prime};
}

std::optional<std::pair<FinVec, FinVec>> nonprime_witness(const CoordIdeal& ideal) {
  std::vector<int> missing;
  size_t s = 0;
  for (int i = 1; i <= ideal.dim; ++i) {
    if (s < ideal.support.size() && ideal.support[s] == i)
      ++s;
    else
      missing.push_back(i);
  }
  if (missing.size() < 2) return std::nullopt;
  return std::make_pair(unit_vec(ideal.dim, missing[0]),
                        unit_vec(ideal.dim, missing[1]));
}

std::vector<CoordIdeal> enumerate_primes(int m) {
  if (m < 1) throw Error(Err::SchemaError, "dimension must be positive");
  std::vector<CoordIdeal> out;
  for (int drop = 1; drop <= m; ++drop) {
    std::vector<int> sup;
    for (int j = 1; j <= m; ++j)
      if (j != drop) sup.push_back(j);
    out.push_back(CoordIdeal{m, std::move(sup)});
  }
  return out;
}

std::vector<CoordIdeal> enumerate_ideals(int m, std::uint64_t seed) {
  if (m < 1 || m > 16) throw Error(Err::SchemaError, "dimension must be in [1, 16]");
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<CoordIdeal> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> sup;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) sup.push_back(i + 1);
    CoordIdeal ideal{m, std::move(sup)};
    for (int trial = 0; trial < 8; ++trial) {
      FinVec x(m, Rational(0));
      for (int i : ideal.support) x[i - 1] = Rational(pick(-9, 9), pick(1, 9));
      FinVec y(m, Rational(0));
      for (int i = 0; i < m; ++i) {
        Rational cap = x[i] < 0 ? Rational(-x[i]) : x[i];
        if (cap != 0)
          y[i] = Rational(pick(0, 9), 10) * cap * (pick(0, 1) ? 1 : -1);
      }
      if (!in_ideal(y, ideal))
        throw std::logic_error("coordinate ideal failed the solidity check");
    }
    out.push_back(std::move(ideal));
  }
  return out;
}

std::optional<int> atom_check(const FinVec& x) {
  std::optional<int> where;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) return std::nullopt;
    if (x[i] > 0) {
      if (where) return std::nullopt;
      where = static_cast<int>(i) + 1;
    }
  }
  return where;
}

std::vector<CoordIdeal> noetherian_chain_demo(int m) {
  if (m < 1) throw Error(Err::SchemaError, "dimension must be positive");
  std::vector<CoordIdeal> chain;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> sup;
    for (int i = 1; i <= k; ++i) sup.push_back(i);
    chain.push_back(CoordIdeal{m, std::move(sup)});
  }
  return chain;
}

std::optional<FinVec> non_coordinate_solidity_witness(const FinVec& v) {
  int nonzero = 0, first = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      ++nonzero;
      if (first < 0) first = static_cast<int>(i);
    }
  }
  if (nonzero < 2) return std::nullopt;
  FinVec x(v.size(), Rational(0));
  x[first] = v[first];
  return x;
}

}  // namespace rsl
