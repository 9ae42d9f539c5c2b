#include <cmath>

#include "doctest.h"
#include "tow/instances.hpp"

using namespace tow;

TEST_CASE("five-cell data") {
    SolvedInstance inst = example_1_1(0);
    CHECK(inst.setup.n_points == 5);
    CHECK(inst.setup.diam == 3);
    CHECK(inst.problem.mu == 0.5);
    CHECK(inst.problem.F == std::vector<double>{0, 0, 0, 0, 12});
    validate(inst.setup);
    CHECK(iterate_once(inst.setup, inst.problem, inst.solution) == inst.solution);

    SolvedInstance with_cost = example_1_1(1);
    CHECK(iterate_once(with_cost.setup, with_cost.problem, with_cost.solution) ==
          with_cost.solution);
    CHECK_THROWS_AS(example_1_1(2), Error);
}

TEST_CASE("nearest-neighbour grid when eps equals h") {
    GridSpec1D spec;
    spec.h = 0.25;
    spec.eps = 0.25;
    Grid1D g = grid_1d(spec);
    // points at -0.25, 0, .25, .5, .75, 1, 1.25
    REQUIRE(g.setup.n_points == 7);
    CHECK(g.coords.front() == doctest::Approx(-0.25));
    CHECK(g.coords.back() == doctest::Approx(1.25));
    for (PointId x = 0; x < 7; ++x) {
        bool interior = x >= 2 && x <= 4;
        CHECK(g.setup.interior(x) == interior);
        if (interior) {
            CHECK(g.setup.balls[x] == std::vector<PointId>{x - 1, x, x + 1});
        }
    }
    CHECK(g.setup.diam == 3);  // layers 1, 2, 1 inward from the two ends
    CHECK(g.problem.mu == 0.5);
}

TEST_CASE("wide balls cover every grid point within eps") {
    GridSpec1D spec;
    spec.h = 0.1;
    spec.eps = 0.3;
    Grid1D g = grid_1d(spec);
    for (PointId x = 0; x < g.setup.n_points; ++x) {
        if (!g.setup.interior(x)) continue;
        for (PointId y = 0; y < g.setup.n_points; ++y) {
            bool in_ball = std::find(g.setup.balls[x].begin(), g.setup.balls[x].end(), y) !=
                           g.setup.balls[x].end();
            CHECK(in_ball == (std::abs(g.coords[y] - g.coords[x]) <= spec.eps + 1e-12));
        }
    }
    LayerDecomposition layers = validate(g.setup);
    CHECK(g.setup.diam == layers.max_layer + 1);
}

TEST_CASE("affine data gives an exact discrete solution") {
    GridSpec1D spec;
    spec.h = 0.05;
    spec.eps = 0.2;
    spec.boundary_values = [](double x) { return 3.0 * x - 1.0; };
    Grid1D g = grid_1d(spec);
    ValueFunction u(g.setup.n_points);
    for (PointId x = 0; x < g.setup.n_points; ++x) u[x] = 3.0 * g.coords[x] - 1.0;
    CHECK(residual(g.setup, g.problem, u) <= 1e-12);
}

TEST_CASE("running cost scaling") {
    GridSpec1D spec;
    spec.h = 0.1;
    spec.eps = 0.2;
    spec.f_tilde = [](double) { return 1.0; };
    Grid1D g = grid_1d(spec);
    for (PointId x = 0; x < g.setup.n_points; ++x) {
        if (g.setup.interior(x)) {
            CHECK(g.problem.f[x] == doctest::Approx(0.5 * spec.eps * spec.eps));
        } else {
            CHECK(g.problem.f[x] == 0.0);
        }
    }
}

TEST_CASE("drift shifts mu and large drift is rejected") {
    GridSpec1D spec;
    spec.h = 0.1;
    spec.eps = 0.1;
    spec.beta = 2.0;
    CHECK(grid_1d(spec).problem.mu == doctest::Approx(0.45));
    spec.beta = 25.0;
    CHECK_THROWS_AS(grid_1d(spec), InvalidMuError);
}

TEST_CASE("grid rejects incompatible spacings") {
    GridSpec1D spec;
    spec.h = 0.1;
    spec.eps = 0.15;
    CHECK_THROWS_AS(grid_1d(spec), Error);
    spec.h = 0.3;  // 1/h is not an integer
    spec.eps = 0.3;
    CHECK_THROWS_AS(grid_1d(spec), Error);
}

TEST_CASE("random instances validate for many seeds") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Instance inst = random_admissible(12, 3, 4, 0.5, seed);
        validate(inst.setup);
        CHECK(inst.problem.mu >= 0.2);
        CHECK(inst.problem.mu <= 0.8);
        CHECK(inst.problem.lambda_min == 0.5);
        for (PointId x = 0; x < inst.setup.n_points; ++x) {
            if (inst.setup.interior(x)) {
                CHECK(inst.problem.f[x] >= 0.5);
                CHECK(inst.problem.f[x] <= 1.5);
                CHECK(inst.setup.balls[x].size() <= 4);
            } else {
                CHECK(std::abs(inst.problem.F[x]) <= 1.0);
            }
        }
    }
}

TEST_CASE("random instances are deterministic in the seed") {
    Instance a = random_admissible(10, 2, 3, 0.25, 77);
    Instance b = random_admissible(10, 2, 3, 0.25, 77);
    CHECK(a.setup.is_boundary == b.setup.is_boundary);
    CHECK(a.setup.balls == b.setup.balls);
    CHECK(a.problem.mu == b.problem.mu);
    CHECK(a.problem.f == b.problem.f);
    CHECK(a.problem.F == b.problem.F);

    Instance c = random_admissible(10, 2, 3, 0.25, 78);
    CHECK(a.setup.balls != c.setup.balls);
}

TEST_CASE("minimal random instance") {
    Instance inst = random_admissible(2, 1, 1, 1.0, 0);
    validate(inst.setup);
    CHECK_THROWS_AS(random_admissible(2, 2, 1, 1.0, 0), InvalidCountsError);
    CHECK_THROWS_AS(random_admissible(1, 0, 1, 1.0, 0), InvalidCountsError);
}

TEST_CASE("random instances solve identically from different starts") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = random_admissible(9, 2, 4, 0.5, 900 + seed);
        std::size_t n = inst.setup.n_points;
        auto [a, ta] = solve(inst.setup, inst.problem, ValueFunction(n, -50.0), {1e-12, 500000});
        auto [b, tb] = solve(inst.setup, inst.problem, ValueFunction(n, 50.0), {1e-12, 500000});
        REQUIRE(ta.status == ConvergenceTrace::Status::Converged);
        REQUIRE(tb.status == ConvergenceTrace::Status::Converged);
        for (PointId x = 0; x < n; ++x) CHECK(std::abs(a[x] - b[x]) <= 1e-8);
    }
}
