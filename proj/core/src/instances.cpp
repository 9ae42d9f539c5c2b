#include "tow/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace tow {

SolvedInstance example_1_1(int f_const) {
    if (f_const != 0 && f_const != 1) throw Error("f_const must be 0 or 1");

    SolvedInstance inst;
    auto& s = inst.setup;
    s.n_points = 5;
    s.is_boundary = {true, false, false, false, true};  // L A M B R
    s.balls = {{}, {0, 1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}, {}};
    s.diam = 3;

    std::vector<double> f(5, static_cast<double>(f_const));
    std::vector<double> F = {0.0, 0.0, 0.0, 0.0, 12.0};
    inst.problem = make_problem(s, 0.5, std::move(f), std::move(F));
    inst.solution = f_const == 0 ? ValueFunction{0.0, 4.0, 6.0, 8.0, 12.0}
                                 : ValueFunction{0.0, 6.0, 9.0, 10.0, 12.0};
    return inst;
}

Grid1D grid_1d(const GridSpec1D& spec) {
    if (!(spec.h > 0.0) || !(spec.eps > 0.0)) throw Error("h and eps must be positive");
    double ratio = spec.eps / spec.h;
    long long m = std::llround(ratio);
    if (m < 1 || std::abs(ratio - static_cast<double>(m)) > 1e-9) {
        throw Error("eps must be an integer multiple of h");
    }
    double inv_h = 1.0 / spec.h;
    long long N = std::llround(inv_h);
    if (N < 2 || std::abs(inv_h - static_cast<double>(N)) > 1e-9) {
        throw Error("1/h must be an integer >= 2");
    }
    double mu = 0.5 - spec.beta * spec.eps / 4.0;
    if (!(mu > 0.0 && mu < 1.0)) throw InvalidMuError(mu);

    Grid1D grid;
    auto& s = grid.setup;
    std::size_t n = static_cast<std::size_t>(N + 2 * m + 1);  // indices 0..N+2m
    s.n_points = n;
    s.is_boundary.resize(n);
    s.balls.resize(n);
    grid.coords.resize(n);
    std::vector<double> f(n, 0.0);
    std::vector<double> F(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double x = (static_cast<double>(i) - static_cast<double>(m)) * spec.h;
        grid.coords[i] = x;
        bool interior = static_cast<long long>(i) > m && static_cast<long long>(i) < N + m;
        s.is_boundary[i] = !interior;
        if (interior) {
            std::size_t lo = i - static_cast<std::size_t>(m);
            std::size_t hi = i + static_cast<std::size_t>(m);
            for (std::size_t j = lo; j <= hi; ++j) s.balls[i].push_back(static_cast<PointId>(j));
            f[i] = spec.f_tilde ? 0.5 * spec.eps * spec.eps * spec.f_tilde(x) : 0.0;
        } else {
            F[i] = spec.boundary_values ? spec.boundary_values(x) : 0.0;
        }
    }
    s.diam = static_cast<int>(n);  // provisional, tightened below
    LayerDecomposition layers = validate(s);
    s.diam = layers.max_layer + 1;
    grid.problem = make_problem(s, mu, std::move(f), std::move(F));
    return grid;
}

Instance random_admissible(std::size_t n, std::size_t n_boundary, std::size_t max_ball,
                           double inf_f, std::uint64_t seed) {
    if (n < 2 || n_boundary < 1 || n_boundary >= n) {
        throw InvalidCountsError("need 1 <= n_boundary < n and n >= 2");
    }
    if (max_ball < 1) throw InvalidCountsError("max_ball must be >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Instance inst;
    auto& s = inst.setup;
    s.n_points = n;
    s.is_boundary.assign(n, false);
    s.balls.resize(n);

    std::vector<PointId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    // first n_boundary of the shuffle are the boundary, the rest are interior
    // in rank order: order[k] for k >= n_boundary has strictly larger rank
    // than everything before it
    for (std::size_t k = 0; k < n_boundary; ++k) s.is_boundary[order[k]] = true;

    for (std::size_t k = n_boundary; k < n; ++k) {
        PointId p = order[k];
        // one guaranteed step downwards in rank
        std::uniform_int_distribution<std::size_t> down(0, k - 1);
        s.balls[p].push_back(order[down(rng)]);
        std::uniform_int_distribution<std::size_t> extra_count(0, max_ball - 1);
        std::uniform_int_distribution<std::size_t> any(0, n - 1);
        std::size_t extras = extra_count(rng);
        for (std::size_t e = 0; e < extras; ++e) {
            PointId q = static_cast<PointId>(any(rng));
            if (std::find(s.balls[p].begin(), s.balls[p].end(), q) == s.balls[p].end()) {
                s.balls[p].push_back(q);
            }
        }
    }
    s.diam = static_cast<int>(n);

    std::vector<double> f(n, 0.0);
    std::vector<double> F(n, 0.0);
    for (PointId x = 0; x < n; ++x) {
        if (s.interior(x)) {
            f[x] = inf_f + unit(rng);
        } else {
            F[x] = 2.0 * unit(rng) - 1.0;
        }
    }
    double mu = 0.2 + 0.6 * unit(rng);
    inst.problem = make_problem(s, mu, std::move(f), std::move(F));
    if (inf_f > 0.0) {
        // f lands in (inf_f, inf_f + 1), so inf_f itself is a strict lower margin
        inst.problem.lambda_min = inf_f;
    }
    return inst;
}

}  // namespace tow
