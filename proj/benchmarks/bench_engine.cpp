#include <benchmark/benchmark.h>

#include "wick/catalog.hpp"

using namespace wick;

namespace {

const Datum& sl3min() {
  static Datum dt = builtin_datum("sl3-minimal");
  return dt;
}

const Datum& gl22() {
  static Datum dt = builtin_datum("gl22-principal");
  return dt;
}

void BM_ratfun_arith(benchmark::State& state) {
  RatFunK a(PolyK::parse("k^3 + 2*k - 1"), PolyK::parse("k^2 + 3"));
  RatFunK b(PolyK::parse("2*k^2 - 5"), PolyK::parse("k + 7"));
  for (auto _ : state) {
    RatFunK c = a * b + a / b - a;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ratfun_arith);

void BM_normal_form_word(benchmark::State& state) {
  const Datum& dt = sl3min();
  std::vector<Factor> word;
  for (size_t i : dt.grading.pos) {
    word.push_back({{GenKind::PhiUpper, static_cast<uint16_t>(i)}, 1});
    word.push_back({{GenKind::PhiLower, static_cast<uint16_t>(i)}, 0});
  }
  word.push_back({{GenKind::Current, static_cast<uint16_t>(dt.grading.zero[0])}, 0});
  for (auto _ : state) {
    VAExpr e = normalize_word(dt.ctx, word);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_normal_form_word);

void BM_d_squared(benchmark::State& state) {
  const Datum& dt = sl3min();
  for (auto _ : state) {
    LambdaPoly p = lambda_bracket(dt.ctx, dt.d, dt.d);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_d_squared);

void BM_closedness_check(benchmark::State& state) {
  const Datum& dt = sl3min();
  VAExpr jf = J_f(dt);
  for (auto _ : state) {
    VAExpr r = apply_d0(dt, jf);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_closedness_check);

void BM_exactness_witness_gl22(benchmark::State& state) {
  const Datum& dt = gl22();
  for (auto _ : state) {
    CheckResult r = verify_thm32(dt);
    benchmark::DoNotOptimize(r.ok);
  }
}
BENCHMARK(BM_exactness_witness_gl22);

void BM_ffr_image(benchmark::State& state) {
  const Datum& dt = sl3min();
  VAExpr jf = J_f(dt);
  for (auto _ : state) {
    VAExpr img = ffr(dt, jf);
    benchmark::DoNotOptimize(img);
  }
}
BENCHMARK(BM_ffr_image);

}  // namespace

BENCHMARK_MAIN();
