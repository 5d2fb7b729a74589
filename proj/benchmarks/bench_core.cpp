#include <benchmark/benchmark.h>

#include "arrfree/arrangement.hpp"
#include "arrfree/logder.hpp"

using namespace arrfree;

static void BM_LatticeBraid(benchmark::State& state) {
    Arrangement a = generate_family(Family::Braid, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(intersection_lattice(a).flats.size());
}
BENCHMARK(BM_LatticeBraid)->Arg(3)->Arg(4)->Arg(5);

static void BM_CharPolyWhitney(benchmark::State& state) {
    Arrangement a = generate_family(Family::Braid, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_whitney(a).coeffs);
}
BENCHMARK(BM_CharPolyWhitney)->Arg(3)->Arg(4)->Arg(5);

static void BM_GradedPiece(benchmark::State& state) {
    MultiArrangement ma =
        MultiArrangement::simple(generate_family(Family::Braid, 4));
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(graded_piece(ma, d).dim());
}
BENCHMARK(BM_GradedPiece)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

static void BM_SaitoDeterminant(benchmark::State& state) {
    FreenessCertificate cert = freeness(generate_family(Family::Braid, 4));
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_matrix_det(saito_matrix(cert.basis)));
}
BENCHMARK(BM_SaitoDeterminant);

BENCHMARK_MAIN();
