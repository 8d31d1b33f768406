#include <benchmark/benchmark.h>

#include "distortion/cayley.hpp"
#include "distortion/certificates.hpp"
#include "distortion/circle_dyn.hpp"
#include "distortion/ergodic.hpp"
#include "distortion/geometry.hpp"
#include "distortion/spread_annulus.hpp"
#include "distortion/torus_dyn.hpp"

using namespace distortion;

namespace {

void BM_HeisenbergBall(benchmark::State& state) {
    const auto gens = cayley::family_group(cayley::Family::heisenberg).generators;
    const int radius = static_cast<int>(state.range(0));
    std::size_t size = 0;
    for (auto _ : state) {
        const auto ball = cayley::generate_ball(gens, radius);
        size = ball.size();
        benchmark::DoNotOptimize(size);
    }
    state.counters["elements"] = static_cast<double>(size);
}
BENCHMARK(BM_HeisenbergBall)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_QuadMatrixMultiply(benchmark::State& state) {
    const auto group = cayley::family_group(cayley::Family::polterovich);
    const auto a = group.generators.elements().front().matrix();
    const auto b = group.generators.elements().back().matrix();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QuadMatrixMultiply);

void BM_CatMatrixPower(benchmark::State& state) {
    const ExactMatrix a({{2, 1}, {1, 1}});
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(mat_power(a, n));
}
BENCHMARK(BM_CatMatrixPower)->RangeMultiplier(8)->Range(8, 4096);

void BM_CertificateVerify(benchmark::State& state) {
    const auto c = cayley::certificate_witness(cayley::Family::mess, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cayley::verify_certificate(c));
}
BENCHMARK(BM_CertificateVerify)->DenseRange(2, 8, 3);

void BM_CatMapCurveLengths(benchmark::State& state) {
    const auto f = torus::ToralAffine::linear(torus::cat_matrix());
    const auto curve = Polyline::circle({0.5, 0.5}, 0.1, 64);
    const int iters = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(torus::curve_iterate_lengths(f, curve, iters).slope);
}
BENCHMARK(BM_CatMapCurveLengths)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_TwistSpread(benchmark::State& state) {
    const auto f = annulus::AnnulusLift::twist(2);
    const auto arc = annulus::AnnulusArc::vertical(0.5);
    const int iters = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(annulus::spread_estimate(f, arc, iters).tail_slope);
}
BENCHMARK(BM_TwistSpread)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RotationNumber(benchmark::State& state) {
    const auto f = circle::CircleLift::piecewise_linear({{0.0, 0.05}, {0.3, 0.15}, {0.6, 0.7}, {0.8, 0.85}});
    const long iters = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(circle::rotation_number(f, 0.0, iters).estimate);
    state.SetItemsProcessed(state.iterations() * iters);
}
BENCHMARK(BM_RotationNumber)->Arg(10000)->Arg(100000);

void BM_BirkhoffCosine(benchmark::State& state) {
    const ergodic::Dynamics t = circle::CircleLift::rotation(0.6180339887498949);
    const long iters = state.range(0);
    for (auto _ : state) {
        const auto s = ergodic::birkhoff_sums(t, ergodic::Observable::cosine(), {0.1, 0.0}, iters);
        benchmark::DoNotOptimize(s.sums.back());
    }
    state.SetItemsProcessed(state.iterations() * iters);
}
BENCHMARK(BM_BirkhoffCosine)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
