#include <benchmark/benchmark.h>

#include "ghull/reproduce.hpp"
#include "ghull/verify.hpp"

using namespace ghull;

namespace {

void BM_HullDecompose(benchmark::State& state) {
    Rng rng(4);
    const auto f = FiniteField::create(3, 2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const LinearCode c = random_code(rng, f, n, n / 2);
    for (auto _ : state) {
        auto dec = c.hull_decompose(1);
        benchmark::DoNotOptimize(dec.certificate_nonsingular);
    }
}
BENCHMARK(BM_HullDecompose)->Arg(8)->Arg(16)->Arg(24);

void BM_DistanceMessages(benchmark::State& state) {
    // the Table-4 cyclic constituent: [8,4] over GF(9), 6561 messages
    const auto f9 = FiniteField::create(3, 2);
    const auto rs = cyclic_code(f9, 8, {2, 3, 4, 5});
    for (auto _ : state) {
        auto d = rs.code.min_distance(std::uint64_t(1) << 22);
        benchmark::DoNotOptimize(d.value);
    }
}
BENCHMARK(BM_DistanceMessages);

void BM_DistanceSupports(benchmark::State& state) {
    // [16,8] matrix product over GF(9): the support-side search is the fast
    // route here
    const auto f9 = FiniteField::create(3, 2);
    const auto c1 = cyclic_code(f9, 8, {2, 3, 4, 5});
    const auto c2 = negacyclic_code(f9, 8, {1, 3, 9, 11});
    const auto a = Matrix::from_rows(f9, {{1, 1}, {1, f9->from_int(-1)}});
    const auto built = matrix_product_code(make_matrix_product_spec(a, {c1.code, c2.code}, 0), 1 << 14);
    for (auto _ : state) {
        auto d = built.code.min_distance(std::uint64_t(1) << 22);
        benchmark::DoNotOptimize(d.value);
    }
}
BENCHMARK(BM_DistanceSupports);

void BM_AnnihilatorOracle(benchmark::State& state) {
    Rng rng(5);
    const auto f = FiniteField::create(3, 1);
    const LinearCode c = random_code(rng, f, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        std::uint64_t count = 0;
        auto s = bruteforce_galois_annihilator(c, 0, &count);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_AnnihilatorOracle)->Arg(6)->Arg(8);

void BM_ReproduceTable1(benchmark::State& state) {
    ReproduceOptions opt;
    for (auto _ : state) {
        auto rep = reproduce_table(1, opt);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_ReproduceTable1);

}  // namespace
