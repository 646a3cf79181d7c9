#include <benchmark/benchmark.h>

#include "ghull/verify.hpp"

using namespace ghull;

namespace {

Matrix random_matrix(Rng& rng, const FieldPtr& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng.below(f->q()));
    return m;
}

void BM_Rref(benchmark::State& state) {
    Rng rng(1);
    const auto f = FiniteField::create(3, 2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_matrix(rng, f, n / 2, n);
    for (auto _ : state) {
        auto r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64);

void BM_Kernel(benchmark::State& state) {
    Rng rng(2);
    const auto f = FiniteField::create(3, 2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_matrix(rng, f, n / 2, n);
    for (auto _ : state) {
        auto k = kernel_basis(m);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_Kernel)->Arg(16)->Arg(32);

void BM_SubspaceIntersect(benchmark::State& state) {
    Rng rng(3);
    const auto f = FiniteField::create(3, 2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Subspace u = Subspace::span_of(random_matrix(rng, f, n / 3, n));
    const Subspace v = Subspace::span_of(random_matrix(rng, f, n / 3, n));
    for (auto _ : state) {
        auto w = u.intersect(v);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_SubspaceIntersect)->Arg(12)->Arg(24);

}  // namespace
