// Parallel kernels vs the serial reference implementations.

#include <benchmark/benchmark.h>

#include "qcs/condition_core.hpp"
#include "qcs/duality_transform.hpp"
#include "qcs/reference.hpp"
#include "qcs/rng.hpp"
#include "qcs/statevector.hpp"

namespace {

using namespace qcs;

std::vector<Amplitude> random_array(int n, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<Amplitude> x(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto& a : x) {
        a = Amplitude{rng.next_gaussian(), rng.next_gaussian()};
        norm2 += std::norm(a);
    }
    for (auto& a : x) {
        a /= std::sqrt(norm2);
    }
    return x;
}

void bm_apply_gate_kernel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const StateVector s(QubitCount(n), random_array(n, 1));
    const Gate g = Gate::controlled(1, 1, n, Mat2::hadamard());
    for (auto _ : state) {
        auto out = apply_gate(s, g);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void bm_apply_gate_reference(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_array(n, 1);
    const Gate g = Gate::controlled(1, 1, n, Mat2::hadamard());
    for (auto _ : state) {
        auto out = reference::apply_gate(x, QubitCount(n), g);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void bm_wht_butterfly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_array(n, 2);
    for (auto _ : state) {
        auto out = wht(x);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n) * n);
}

void bm_wht_direct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto x = random_array(n, 2);
    for (auto _ : state) {
        auto out = reference::wht(x);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n) * (std::int64_t{1} << n));
}

void bm_event_probability_kernel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const StateVector s(QubitCount(n), random_array(n, 3));
    const Event e = satisfying_set(ConditionLabel(QubitCount(n), 0b101));
    for (auto _ : state) {
        benchmark::DoNotOptimize(event_probability_exact(s, e));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void bm_event_probability_reference(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const StateVector s(QubitCount(n), random_array(n, 3));
    const Event e = satisfying_set(ConditionLabel(QubitCount(n), 0b101));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::event_probability(s, e));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void bm_parity_event_kernel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ParityCondition pc(ConditionLabel(QubitCount(n), 0b111), 0);
    for (auto _ : state) {
        auto e = parity_event(pc);
        benchmark::DoNotOptimize(e);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void bm_parity_event_reference(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ParityCondition pc(ConditionLabel(QubitCount(n), 0b111), 0);
    for (auto _ : state) {
        auto e = reference::parity_event(pc);
        benchmark::DoNotOptimize(e);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

BENCHMARK(bm_apply_gate_kernel)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(bm_apply_gate_reference)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(bm_wht_butterfly)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_wht_direct)->Arg(8)->Arg(12);
BENCHMARK(bm_event_probability_kernel)->Arg(16)->Arg(20);
BENCHMARK(bm_event_probability_reference)->Arg(16)->Arg(20);
BENCHMARK(bm_parity_event_kernel)->Arg(16)->Arg(20);
BENCHMARK(bm_parity_event_reference)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
