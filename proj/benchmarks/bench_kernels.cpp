#include <benchmark/benchmark.h>

#include "algint/algebra.hpp"
#include "algint/catalog.hpp"
#include "algint/conjugation.hpp"
#include "algint/integration.hpp"
#include "algint/kernels.hpp"
#include "algint/rng.hpp"

using namespace algint;

namespace {

Matrix random_matrix(int n, SmallIntRng& rng, long bound = 9) {
  FieldDesc f = FieldDesc::rational();
  Matrix m(n, n, f);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = random_scalar(rng, f, bound);
  return m;
}

std::vector<kernels::Row> random_rows(int nrows, int ncols, SmallIntRng& rng) {
  std::vector<kernels::Row> rows(nrows);
  FieldDesc f = FieldDesc::rational();
  for (auto& row : rows) row = random_coeffs(rng, f, ncols, 9);
  return rows;
}

void BM_matmul_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SmallIntRng rng(kDefaultSeed);
  Matrix a = random_matrix(n, rng);
  Matrix b = random_matrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ref::matmul(a, b));
}

void BM_matmul_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SmallIntRng rng(kDefaultSeed);
  Matrix a = random_matrix(n, rng);
  Matrix b = random_matrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul(a, b));
}

void BM_rref_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SmallIntRng rng(kDefaultSeed);
  auto rows = random_rows(2 * n, n, rng);
  FieldDesc f = FieldDesc::rational();
  for (auto _ : state) benchmark::DoNotOptimize(ref::rref(rows, n, f));
}

void BM_rref_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SmallIntRng rng(kDefaultSeed);
  auto rows = random_rows(2 * n, n, rng);
  FieldDesc f = FieldDesc::rational();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rref(rows, n, f));
}

void BM_assoc_scan_serial(benchmark::State& state) {
  Algebra a = matrix_algebra(static_cast<int>(state.range(0)));
  RegularReps reps = regular_reps(a);
  for (auto _ : state)
    benchmark::DoNotOptimize(ref::associativity_scan(a, reps.right, reps.left));
}

void BM_assoc_scan_parallel(benchmark::State& state) {
  Algebra a = matrix_algebra(static_cast<int>(state.range(0)));
  RegularReps reps = regular_reps(a);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::associativity_scan(a, reps.right, reps.left));
}

void BM_completeness_serial(benchmark::State& state) {
  Algebra a = matrix_algebra(static_cast<int>(state.range(0)));
  auto cm = pick_invertible_c(a, solve_c_space(a));
  IntegralFunctional fn = integral_functional(a, *cm);
  for (auto _ : state)
    benchmark::DoNotOptimize(ref::completeness_violations(
        a, cm->matrix, fn.values, kernels::CompletenessOrder::ket_bra));
}

void BM_completeness_parallel(benchmark::State& state) {
  Algebra a = matrix_algebra(static_cast<int>(state.range(0)));
  auto cm = pick_invertible_c(a, solve_c_space(a));
  IntegralFunctional fn = integral_functional(a, *cm);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::completeness_violations(
        a, cm->matrix, fn.values, kernels::CompletenessOrder::ket_bra));
}

}  // namespace

BENCHMARK(BM_matmul_serial)->Arg(16)->Arg(32);
BENCHMARK(BM_matmul_parallel)->Arg(16)->Arg(32);
BENCHMARK(BM_rref_serial)->Arg(48)->Arg(96);
BENCHMARK(BM_rref_parallel)->Arg(48)->Arg(96);
BENCHMARK(BM_assoc_scan_serial)->Arg(3)->Arg(4);
BENCHMARK(BM_assoc_scan_parallel)->Arg(3)->Arg(4);
BENCHMARK(BM_completeness_serial)->Arg(3)->Arg(4);
BENCHMARK(BM_completeness_parallel)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
