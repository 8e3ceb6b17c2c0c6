#include "lieortho/catalog.hpp"
#include "lieortho/classify.hpp"
#include "lieortho/linalg.hpp"
#include "lieortho/ortho.hpp"

#include <benchmark/benchmark.h>

using namespace lieortho;

namespace {

Matrix sample(std::size_t n) {
  Rng rng(n);
  return random_integer_matrix(rng, n, n);
}

void bm_rref(benchmark::State &state) {
  const Matrix m = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref)->DenseRange(4, 16, 4);

void bm_det(benchmark::State &state) {
  const Matrix m = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(det(m));
}
BENCHMARK(bm_det)->DenseRange(4, 16, 4);

void bm_char_poly(benchmark::State &state) {
  const Matrix m = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(bm_char_poly)->DenseRange(4, 16, 4);

void bm_is_lie_orthogonal_heisenberg(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Operator j = heisenberg_op(n, random_symplectic(n, std::uint64_t{1}), Rational(2),
                                   Vector(2 * n));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_lie_orthogonal(j));
}
BENCHMARK(bm_is_lie_orthogonal_heisenberg)->DenseRange(1, 8, 1);

void bm_is_lie_orthogonal_gln(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Operator j = gln_op(catalog::gln(n).share(), -1, Vector(n * n));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_lie_orthogonal(j));
}
BENCHMARK(bm_is_lie_orthogonal_gln)->DenseRange(2, 4, 1);

void bm_invariance_report(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Operator j = heisenberg_op(n, random_symplectic(n, std::uint64_t{2}), Rational(3),
                                   Vector(2 * n));
  for (auto _ : state)
    benchmark::DoNotOptimize(invariance_report(j));
}
BENCHMARK(bm_invariance_report)->DenseRange(1, 4, 1);

} // namespace

BENCHMARK_MAIN();
