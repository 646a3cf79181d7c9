#include <benchmark/benchmark.h>

#include "ghull/finite_field.hpp"

using namespace ghull;

namespace {

void BM_FieldCreate(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    const auto m = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        auto f = FiniteField::create(p, m);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_FieldCreate)->Args({2, 8})->Args({3, 4})->Args({13, 2})->Args({2, 13});

void BM_Mul(benchmark::State& state) {
    const auto f = FiniteField::create(static_cast<std::uint64_t>(state.range(0)),
                                       static_cast<unsigned>(state.range(1)));
    rep_t x = 1;
    const rep_t g = f->primitive_element();
    for (auto _ : state) {
        x = f->mul(x, g);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Mul)->Args({3, 2})->Args({3, 4})->Args({2, 13})->Args({2, 20});

void BM_Add(benchmark::State& state) {
    const auto f = FiniteField::create(static_cast<std::uint64_t>(state.range(0)),
                                       static_cast<unsigned>(state.range(1)));
    rep_t x = 1, y = f->primitive_element();
    for (auto _ : state) {
        x = f->add(x, y);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Add)->Args({3, 2})->Args({3, 4})->Args({2, 13})->Args({3, 8});

void BM_Frobenius(benchmark::State& state) {
    const auto f = FiniteField::create(3, 4);
    rep_t x = f->primitive_element();
    for (auto _ : state) {
        x = f->frobenius(x, 1);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Frobenius);

}  // namespace
