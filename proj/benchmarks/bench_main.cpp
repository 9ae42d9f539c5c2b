#include <benchmark/benchmark.h>

#include <random>

#include "tow/instances.hpp"
#include "tow/strategy.hpp"
#include "tow/trees.hpp"

namespace {

tow::PointId first_interior(const tow::AdmissibleSetup& s) {
    for (tow::PointId x = 0; x < s.n_points; ++x) {
        if (s.interior(x)) return x;
    }
    return 0;
}

tow::Grid1D make_grid(double eps) {
    tow::GridSpec1D spec;
    spec.eps = eps;
    spec.h = eps / 4.0;
    spec.f_tilde = [](double) { return 1.0; };
    spec.boundary_values = [](double x) { return 0.5 * x * (1.0 - x); };
    return tow::grid_1d(spec);
}

void BM_sweep(benchmark::State& state) {
    tow::Grid1D grid = make_grid(4.0 / static_cast<double>(state.range(0)));
    tow::ValueFunction u(grid.setup.n_points, 0.0);
    for (auto _ : state) {
        u = tow::iterate_once(grid.setup, grid.problem, u);
        benchmark::DoNotOptimize(u.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.setup.n_points);
}
BENCHMARK(BM_sweep)->Arg(40)->Arg(160)->Arg(640);

void BM_solve_grid(benchmark::State& state) {
    tow::Grid1D grid = make_grid(4.0 / static_cast<double>(state.range(0)));
    tow::ValueFunction u0(grid.setup.n_points);
    for (std::size_t i = 0; i < u0.size(); ++i) {
        u0[i] = 0.5 * grid.coords[i] * (1.0 - grid.coords[i]);
    }
    for (auto _ : state) {
        auto [u, trace] = tow::solve(grid.setup, grid.problem, u0, {1e-8, 1'000'000});
        benchmark::DoNotOptimize(u.data());
    }
}
BENCHMARK(BM_solve_grid)->Arg(40)->Arg(160);

void BM_mass_profile(benchmark::State& state) {
    std::mt19937_64 rng(7);
    tow::GameTree tree = tow::random_tree(rng, 0.55, static_cast<int>(state.range(0)), 100'000);
    for (auto _ : state) {
        tow::MassProfile p = tow::mass_profile(tree, 0.5);
        benchmark::DoNotOptimize(p.a.data());
    }
}
BENCHMARK(BM_mass_profile)->Arg(20)->Arg(60);

void BM_strategy_mass_profile(benchmark::State& state) {
    tow::Instance inst = tow::random_admissible(64, 8, 6, 0.5, 2);
    auto [u, trace] = tow::solve(inst.setup, inst.problem,
                                 tow::ValueFunction(inst.setup.n_points, 0.0), {1e-10, 200'000});
    for (auto _ : state) {
        tow::MassProfile p = tow::strategy_mass_profile(inst.setup, u, first_interior(inst.setup),
                                                        static_cast<int>(state.range(0)),
                                                        inst.problem.mu);
        benchmark::DoNotOptimize(p.a.data());
    }
}
BENCHMARK(BM_strategy_mass_profile)->Arg(100)->Arg(2000);

void BM_oracle(benchmark::State& state) {
    tow::Instance inst = tow::random_admissible(6, 2, 3, 0.5, 4);
    tow::ValueFunction v(6, 0.25);
    tow::PointId x = first_interior(inst.setup);
    for (auto _ : state) {
        double r = tow::iterated_value_oracle(inst.setup, inst.problem, v, x,
                                              static_cast<int>(state.range(0)), 100'000'000);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_oracle)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
