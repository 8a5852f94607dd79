#include <benchmark/benchmark.h>

#include <vector>

#include "hyperlab/hardy.hpp"
#include "hyperlab/shift.hpp"

using namespace hyperlab;

static void SalasUnilateral(benchmark::State& state) {
    const auto w = WeightSequence::constant(Axis::Natural, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(salas_unilateral(w, static_cast<std::size_t>(state.range(0)), 1e6));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SalasUnilateral)->RangeMultiplier(4)->Range(256, 1 << 16)->Complexity();

static void SalasBilateral(benchmark::State& state) {
    const auto w = WeightSequence::constant(Axis::Integers, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(salas_bilateral(w, {0.1, 8, static_cast<std::size_t>(state.range(0))}));
    }
}
BENCHMARK(SalasBilateral)->Arg(64)->Arg(1024);

static void RightInverseRoundTrip(benchmark::State& state) {
    const BackwardShift t(WeightSequence::periodic(Axis::Integers, {0.5, 2.0, 1.5}));
    std::vector<Complex> c(32, Complex{1.0, -0.5});
    const WindowVector z(IndexWindow::make(-16, 15, Axis::Integers), c, 2.0);
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_power(t, right_inverse_power(t, z, k), k));
    }
}
BENCHMARK(RightInverseRoundTrip)->Arg(8)->Arg(40);

static void Refute(benchmark::State& state) {
    const auto w = WeightSequence::piecewise(0.5, 2.0);
    std::vector<std::size_t> nk;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(state.range(0)); n *= 2) {
        nk.push_back(n);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(refute_conjecture(w, nk, 1000, 10 * state.range(0)));
    }
}
BENCHMARK(Refute)->Arg(64)->Arg(256);

static void Compose(benchmark::State& state) {
    const auto phi = MoebiusMap::parabolic(Complex{1.0, 0.5});
    std::vector<Complex> c(32);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = 1.0 / static_cast<double>(k + 1);
    }
    const HardyFunction f(c);
    const auto cap = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose({phi, cap}, f));
    }
}
BENCHMARK(Compose)->RangeMultiplier(2)->Range(64, 1024);

static void OrbitDecay(benchmark::State& state) {
    const auto f = HardyFunction::identity();
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit_decay(f, 1.0, 0.5, static_cast<std::size_t>(state.range(0)), threads));
    }
}
BENCHMARK(OrbitDecay)->Args({10000, 1})->Args({100000, 1})->Args({100000, 4})->UseRealTime();
BENCHMARK_MAIN();
