#include <benchmark/benchmark.h>

#include "flatk/character.hpp"
#include "flatk/cyclo.hpp"
#include "flatk/engine.hpp"
#include "flatk/oracle.hpp"

using namespace flatk;

namespace {

void BM_CycloMul(benchmark::State& state) {
    const Cyclo a = Cyclo::root_of_unity(7, 360) + Cyclo::root_of_unity(11, 360);
    const Cyclo b = Cyclo::root_of_unity(1, 8) + Cyclo(Rational(3, 7));
    for (auto _ : state) {
        Cyclo c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CycloMul);

void BM_Freudenthal(benchmark::State& state) {
    const RootDatum& d = root_datum('A', 2);
    const long m = state.range(0);
    for (auto _ : state) {
        Character c = weight_multiplicities(d, {m, m});
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Freudenthal)->Arg(2)->Arg(4)->Arg(6);

void BM_IndexPairing(benchmark::State& state) {
    const RootDatum& d = root_datum('A', 1);
    IndexJob job;
    job.datum = &d;
    job.genus = 2;
    job.level = state.range(0);
    job.order = 3;
    job.deformation = cached_character(d, {2});
    job.boundary = {cached_character(d, {2})};
    for (auto _ : state) {
        auto v = index_pairing<Cyclo>(job);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_IndexPairing)->Arg(3)->Arg(6)->Arg(12);

void BM_DiskOracle(benchmark::State& state) {
    const RootDatum& d = root_datum('A', 1);
    const Character v = cached_character(d, {2});
    const Character f = cached_character(d, {2});
    for (auto _ : state) {
        auto s = disk_pairing(d, v, state.range(0), f, 3);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_DiskOracle)->Arg(1)->Arg(3);

} // namespace

BENCHMARK_MAIN();
