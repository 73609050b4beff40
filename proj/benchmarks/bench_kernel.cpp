// Microbenchmarks for the exact kernels that dominate run time: pointwise
// sup (per-cell root isolation), Sturm root isolation itself, principal
// ideal membership, and the gauge norm bisection.

#include <benchmark/benchmark.h>

#include "rsl/spectrum.hpp"

using namespace rsl;

namespace {

const Domain unit = make_domain(Rational(0), Rational(1), std::nullopt);

PiecewisePoly wiggle() {
  // (t - 1/4)(t - 1/2)(t - 3/4) as one piece; sup against its negation
  // forces isolation of all three roots.
  Polynomial p = Polynomial::linear(Rational(-1, 4), Rational(1)) *
                 Polynomial::linear(Rational(-1, 2), Rational(1)) *
                 Polynomial::linear(Rational(-3, 4), Rational(1));
  return pw_poly(p, unit);
}

void bm_pw_sup(benchmark::State& state) {
  PiecewisePoly f = wiggle();
  PiecewisePoly g = pw_scale(Rational(-1), f);
  for (auto _ : state) benchmark::DoNotOptimize(pw_sup(f, g));
}
BENCHMARK(bm_pw_sup);

void bm_isolate_roots(benchmark::State& state) {
  // Six rational roots packed into the unit interval.
  Polynomial p = Polynomial::constant(Rational(1));
  for (int i = 1; i <= 6; ++i)
    p = p * Polynomial::linear(Rational(-i, 7), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(p, Rational(0), Rational(1)));
}
BENCHMARK(bm_isolate_roots);

void bm_principal_membership(benchmark::State& state) {
  PrimeDescriptor p = right_k(AlgebraicNumber::from_rational(Rational(1, 2)), 2, unit);
  PiecewisePoly g = synthesize_generator(p, unit);
  PiecewisePoly u = pw_mul(g, pw_hat(unit, Rational(1, 4), Rational(3, 4), Rational(2)));
  for (auto _ : state) benchmark::DoNotOptimize(principal_membership(u, g));
}
BENCHMARK(bm_principal_membership);

void bm_gauge_norm(benchmark::State& state) {
  PiecewisePoly f = pw_abs(pw_poly(Polynomial::linear(Rational(-1, 2), Rational(1)), unit));
  PiecewisePoly g = pw_poly(poly_pow(Polynomial::linear(Rational(-1, 2), Rational(1)), 2), unit);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_norm(g, f, Rational(1, 1000)));
}
BENCHMARK(bm_gauge_norm);

}  // namespace

BENCHMARK_MAIN();
