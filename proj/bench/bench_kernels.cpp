// Serial reference vs OpenMP kernels.

#include "avw/factory.hpp"
#include "avw/identity.hpp"
#include "avw/random.hpp"
#include "avw/symbolic.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace avw;

Algebra bench_algebra(std::size_t dim) {
    if (dim == 8) return build(published_cracovian());
    Rng rng(0x42454e43);
    return build(AlgebraSpec::principal(2, rng.unit_quaternion(), rng.unit_quaternion()));
}

void square_of_generic(benchmark::State& state, AlgPoly (*mul)(const Algebra&, const AlgPoly&, const AlgPoly&)) {
    const Algebra a = bench_algebra(static_cast<std::size_t>(state.range(0)));
    const AlgPoly x = AlgPoly::generic(a.dim(), 0);
    const AlgPoly x2 = mul(a, x, x);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, x2, x));
}

void BM_alg_mul_reference(benchmark::State& s) { square_of_generic(s, alg_mul_reference); }
void BM_alg_mul(benchmark::State& s) { square_of_generic(s, alg_mul); }

void BM_profile_serial(benchmark::State& state) {
    const Algebra a = bench_algebra(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(identity_profile_serial(a));
}

void BM_profile(benchmark::State& state) {
    const Algebra a = bench_algebra(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(identity_profile(a));
}

}  // namespace

BENCHMARK(BM_alg_mul_reference)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_alg_mul)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile_serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_profile)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
