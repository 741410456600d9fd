#include "ciqw/search.hpp"

#include <benchmark/benchmark.h>

using namespace ciqw;

static void BM_BuildJohnson(benchmark::State& state) {
    const GraphSpec spec = GraphSpec::johnson(state.range(0), state.range(0) / 2);
    for (auto _ : state) {
        Graph g = build_graph(spec);
        benchmark::DoNotOptimize(g.edges.data());
    }
}
BENCHMARK(BM_BuildJohnson)->Arg(6)->Arg(8)->Arg(10);

static void BM_Eigendecompose(benchmark::State& state) {
    const LaplacianMatrix L = laplacian(build_graph(GraphSpec::complete(state.range(0))));
    for (auto _ : state) {
        Spectrum sp = eigendecompose(L);
        benchmark::DoNotOptimize(sp.eigenvalues.data());
    }
}
BENCHMARK(BM_Eigendecompose)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_ControlledEvolve(benchmark::State& state) {
    const Graph g = build_graph(GraphSpec::hamming(state.range(0), 2));
    const Spectrum sp = with_integer_eigenvalues(eigendecompose(laplacian(g)));
    const PhaseEstimationConfig cfg =
        PhaseEstimationConfig::for_max_eigenvalue(sp.eigenvalues.back());
    StateVector joint = StateVector::with_ancilla(StateVector::uniform(g.n_vertices), cfg.s);
    for (auto _ : state) {
        controlled_evolve(joint, sp, cfg.t0);
        benchmark::DoNotOptimize(joint.amplitudes().data());
    }
}
BENCHMARK(BM_ControlledEvolve)->Arg(3)->Arg(4)->Arg(5);

static void BM_ReflectionCircuit(benchmark::State& state) {
    const Graph g = build_graph(GraphSpec::hamming(state.range(0), 2));
    const Spectrum sp = with_integer_eigenvalues(eigendecompose(laplacian(g)));
    const PhaseEstimationConfig cfg =
        PhaseEstimationConfig::for_max_eigenvalue(sp.eigenvalues.back());
    for (auto _ : state) {
        StateVector joint =
            StateVector::with_ancilla(StateVector::uniform(g.n_vertices), cfg.s);
        reflection_circuit(joint, sp, cfg, 1.0);
        benchmark::DoNotOptimize(joint.amplitudes().data());
    }
}
BENCHMARK(BM_ReflectionCircuit)->Arg(3)->Arg(4)->Arg(5);

static void BM_RunSearchCircuit(benchmark::State& state) {
    const Graph g = build_graph(GraphSpec::johnson(state.range(0), 2));
    const MarkedSet m = MarkedSet::of(select_marked_vertices(7, g.n_vertices, 1),
                                      g.n_vertices);
    for (auto _ : state) {
        SearchResult r = run_search(g, m, {});
        benchmark::DoNotOptimize(r.success_probability);
    }
}
BENCHMARK(BM_RunSearchCircuit)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
