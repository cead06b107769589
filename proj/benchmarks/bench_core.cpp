#include <benchmark/benchmark.h>

#include "matdist/distance.hpp"
#include "matdist/quadform.hpp"
#include "matdist/spheres.hpp"

using namespace matdist;

namespace {

// Gauss sum via the p-bucket histogram (the production path).
void BM_GaussSumHistogram(benchmark::State& state) {
    FieldPtr f = Field::make(3);
    const unsigned n = static_cast<unsigned>(state.range(0));
    const FqMatrix a = FqMatrix::identity(*f, n);
    const FqMatrix b(*f, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sum(a, b));
    }
}
BENCHMARK(BM_GaussSumHistogram)->Arg(2)->Arg(3);

// Same sum accumulated termwise in Z[zeta_p]; the baseline the histogram
// evaluation replaces.
void BM_GaussSumTermwise(benchmark::State& state) {
    FieldPtr f = Field::make(3);
    const unsigned n = static_cast<unsigned>(state.range(0));
    const FqMatrix a = FqMatrix::identity(*f, n);
    MatrixSpace space(f, n);
    for (auto _ : state) {
        CycInt acc(f->p());
        for (std::uint64_t xi = 0; xi < space.size(); ++xi) {
            const FqMatrix x = space.at(xi);
            acc += psi(*f, (a * x * x).trace());
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_GaussSumTermwise)->Arg(2)->Arg(3);

void BM_CycleType(benchmark::State& state) {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);
    MatrixSpace space(f, 3);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cycle_type(space.at(i), sieve));
        i = (i + 7919) % space.size();
    }
}
BENCHMARK(BM_CycleType);

void BM_GramRadical(benchmark::State& state) {
    FieldPtr f = Field::make(3);
    const FqMatrix a = FqMatrix::diag(*f, {1, 2, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_matrix(a).radical_dim);
    }
}
BENCHMARK(BM_GramRadical);

void BM_SphereFormulaSingleRadius(benchmark::State& state) {
    FieldPtr f = Field::make(3);
    GaussCache cache(f, 2);
    const ClassifiedSpace cs = classify_space(f, 2, cache);
    const FqMatrix t = FqMatrix::identity(*f, 2);
    const unsigned r = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sphere_count_formula(t, r, cs));
    }
}
BENCHMARK(BM_SphereFormulaSingleRadius)->Arg(1)->Arg(4);

void BM_SphereBruteAllRadii(benchmark::State& state) {
    FieldPtr f = Field::make(3);
    const unsigned r = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sphere_counts_brute_all(f, 2, r));
    }
}
BENCHMARK(BM_SphereBruteAllRadii)->Arg(2)->Arg(3);

void BM_PairCountsTransform(benchmark::State& state) {
    FieldPtr f = Field::make(3);
    SplitMix64 rng(1);
    const PointSet e = random_point_set(f, 2, 2, 1000, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pair_distance_counts_transform(e, 1));
    }
}
BENCHMARK(BM_PairCountsTransform);

}  // namespace

BENCHMARK_MAIN();
