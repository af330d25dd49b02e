#include "benchmark/benchmark.h"

#include "hcgap/oracle.hpp"
#include "hcgap/scan.hpp"
#include "hcgap/smoothness.hpp"

using namespace hcgap;

static void BM_AlphaProfile(benchmark::State& state) {
    Int d = 19;
    for (auto _ : state) {
        benchmark::DoNotOptimize(alpha_profile(3, d, 9).value);
        d = d == 200 ? 19 : d + 1;
    }
}
BENCHMARK(BM_AlphaProfile);

static void BM_BoundaryB(benchmark::State& state) {
    const BoundaryProfile bp = boundary_profile(11);
    Int d = 23;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bp.big_b(d));
        d = d == 200 ? 23 : d + 1;
    }
}
BENCHMARK(BM_BoundaryB);

static void BM_FourSquares(benchmark::State& state) {
    Int b = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(four_squares(b).c1);
        b = (b + 1) % 10000;
    }
}
BENCHMARK(BM_FourSquares);

static void BM_BuildLowDegree(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build(9, 19, 11).cls.a);
    }
}
BENCHMARK(BM_BuildLowDegree);

static void BM_BuildPipeline(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build(9, 40, 60).cls.a);
    }
}
BENCHMARK(BM_BuildPipeline);

static void BM_BuildAndVerifyColumn(benchmark::State& state) {
    const Int n = state.range(0);
    for (auto _ : state) {
        Int verified = 0;
        for (Int d = 2 * n + 1; d <= 2 * n + 4; ++d) {
            const Int top = pi_value(0, d, n);
            for (Int g = 0; g <= top; ++g) {
                if (classify(n, d, g).tag != DomainTag::Band) continue;
                const Certificate cert = verify(build(n, d, g));
                verified += cert.verdict->holds ? 1 : 0;
            }
        }
        benchmark::DoNotOptimize(verified);
    }
}
BENCHMARK(BM_BuildAndVerifyColumn)->Arg(9)->Arg(13);

static void BM_BruteSpectrumSmall(benchmark::State& state) {
    const Surface surf = make_surface(9, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            brute_spectrum(surf, state.range(0), SpectrumCriterion::C1C5).pairs.size());
    }
}
BENCHMARK(BM_BruteSpectrumSmall)->Arg(4)->Arg(6);

static void BM_ScanClassifyOnly(benchmark::State& state) {
    ScanJob job;
    job.n = 9;
    job.d_lo = 19;
    job.d_hi = 60;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_scan(job).summary.rows);
    }
}
BENCHMARK(BM_ScanClassifyOnly);

BENCHMARK_MAIN();
