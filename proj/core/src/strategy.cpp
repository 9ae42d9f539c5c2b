#include "tow/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tow {

namespace {

// argmax/argmin of u over the ball, ties broken by smallest point id
PointId arg_best(const std::vector<PointId>& ball, const ValueFunction& u, bool want_max) {
    PointId best = ball[0];
    for (std::size_t i = 1; i < ball.size(); ++i) {
        PointId y = ball[i];
        bool better = want_max ? u[y] > u[best] : u[y] < u[best];
        if (better || (u[y] == u[best] && y < best)) best = y;
    }
    return best;
}

}  // namespace

void check_strategy(const AdmissibleSetup& setup, const LabeledStrategy& s) {
    if (s.tree.size() == 0 || s.labels.size() != s.tree.size()) {
        throw InvalidStrategyError("labels and tree nodes do not match");
    }
    if (s.labels[0] != s.origin) throw InvalidStrategyError("root label differs from origin");
    for (int t = 0; t < static_cast<int>(s.tree.size()); ++t) {
        PointId p = s.labels[t];
        if (p >= setup.n_points) throw InvalidStrategyError("label out of range");
        if (!s.tree.is_leaf(t)) {
            if (setup.boundary(p)) throw InvalidStrategyError("interior node labeled by a boundary point");
            const auto& ball = setup.balls[p];
            PointId lc = s.labels[s.tree.nodes[t].left];
            PointId rc = s.labels[s.tree.nodes[t].right];
            if (std::find(ball.begin(), ball.end(), lc) == ball.end() ||
                std::find(ball.begin(), ball.end(), rc) == ball.end()) {
                throw InvalidStrategyError("child label outside the parent's ball");
            }
        } else if (s.tree.nodes[t].depth < s.horizon && setup.interior(p)) {
            throw InvalidStrategyError("interior leaf above the depth horizon");
        }
    }
}

LabeledStrategy extract_strategy_tree(const AdmissibleSetup& setup, const DppProblem&,
                                      const ValueFunction& u, PointId x, int L) {
    LabeledStrategy s;
    s.origin = x;
    s.horizon = L;
    s.tree = single_node();
    s.labels = {x};

    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int t : frontier) {
            PointId p = s.labels[t];
            if (setup.boundary(p) || s.tree.nodes[t].depth >= L) continue;
            const auto& ball = setup.balls[p];
            int lc = split_leaf(s.tree, t);
            s.labels.push_back(arg_best(ball, u, /*want_max=*/true));
            s.labels.push_back(arg_best(ball, u, /*want_max=*/false));
            next.push_back(lc);
            next.push_back(lc + 1);
        }
        frontier = std::move(next);
    }
    return s;
}

double evaluate_w(const AdmissibleSetup& setup, const DppProblem& problem,
                  const LabeledStrategy& s, const ValueFunction& v) {
    check_strategy(setup, s);
    if (setup.boundary(s.origin)) return problem.F[s.origin];

    double total = problem.f[s.origin];
    for (int t = 0; t < static_cast<int>(s.tree.size()); ++t) {
        double m = node_mass(s.tree, t, problem.mu);
        PointId p = s.labels[t];
        if (!s.tree.is_leaf(t)) {
            if (t != 0) total += m * problem.f[p];
        } else if (setup.boundary(p)) {
            total += m * problem.F[p];
        } else {
            total += m * v[p];
        }
    }
    return total;
}

namespace {

double oracle_rec(const AdmissibleSetup& setup, const DppProblem& problem,
                  const ValueFunction& v, PointId x, int rem, std::uint64_t budget,
                  std::uint64_t& expanded) {
    if (++expanded > budget) throw BudgetExceededError(budget);
    if (setup.boundary(x)) return problem.F[x];
    if (rem == 0) return v[x];

    const auto& ball = setup.balls[x];
    std::vector<double> sub(ball.size());
    for (std::size_t i = 0; i < ball.size(); ++i) {
        sub[i] = oracle_rec(setup, problem, v, ball[i], rem - 1, budget, expanded);
    }
    // sup over the max player's choice of inf over the min player's choice,
    // every pair evaluated explicitly
    double best = -std::numeric_limits<double>::infinity();
    for (double a : sub) {
        double worst = std::numeric_limits<double>::infinity();
        for (double b : sub) {
            worst = std::min(worst, dpp_rhs(problem.mu, a, b, problem.f[x]));
        }
        best = std::max(best, worst);
    }
    return best;
}

}  // namespace

double iterated_value_oracle(const AdmissibleSetup& setup, const DppProblem& problem,
                             const ValueFunction& v, PointId x, int L,
                             std::uint64_t node_budget) {
    if (L < 0) throw Error("L must be >= 0");
    std::uint64_t expanded = 0;
    if (L == 0) return setup.boundary(x) ? problem.F[x] : v[x];
    return oracle_rec(setup, problem, v, x, L, node_budget, expanded);
}

TiterConstant titer_constant(double Lambda, double lambda) {
    if (!(lambda > 0.0)) throw LambdaNotPositiveError(lambda);
    return {std::max((Lambda + 1.0 - lambda) / lambda, 2.0 * Lambda / lambda)};
}

TiterConstant titer_constant(const DppProblem& problem) {
    return titer_constant(problem.Lambda, problem.lambda_min);
}

bool verify_titer(const LabeledStrategy& s, double mu, double c_titer) {
    MassProfile p = mass_profile(s.tree, mu);
    return p.interior_mass_total() <= c_titer + c_titer * p.leaf_mass_total();
}

MassProfile strategy_mass_profile(const AdmissibleSetup& setup, const ValueFunction& u,
                                  PointId x, int L, double mu) {
    if (!(mu > 0.0 && mu < 1.0)) throw InvalidMuError(mu);
    MassProfile out;
    if (setup.boundary(x)) {
        out.a = {1.0};
        out.b = {1.0};
        return out;
    }
    if (L == 0) {
        out.a = {1.0};
        out.b = {1.0};
        return out;
    }

    // successor map: greedy choices depend only on the label, not the depth
    std::vector<PointId> left(setup.n_points), right(setup.n_points);
    for (PointId y = 0; y < setup.n_points; ++y) {
        if (setup.interior(y)) {
            left[y] = arg_best(setup.balls[y], u, true);
            right[y] = arg_best(setup.balls[y], u, false);
        }
    }

    std::vector<double> alive(setup.n_points, 0.0);
    alive[x] = 1.0;
    out.a = {1.0};
    out.b = {0.0};
    for (int depth = 1; depth <= L; ++depth) {
        std::vector<double> next(setup.n_points, 0.0);
        double boundary_leaves = 0.0;
        for (PointId y = 0; y < setup.n_points; ++y) {
            if (alive[y] == 0.0) continue;
            double ml = mu * alive[y];
            double mr = (1.0 - mu) * alive[y];
            if (setup.boundary(left[y])) boundary_leaves += ml;
            else next[left[y]] += ml;
            if (setup.boundary(right[y])) boundary_leaves += mr;
            else next[right[y]] += mr;
        }
        double interior_alive = 0.0;
        for (double m : next) interior_alive += m;
        if (boundary_leaves == 0.0 && interior_alive == 0.0) break;  // all branches ended
        out.a.push_back(boundary_leaves + interior_alive);
        out.b.push_back(depth == L ? boundary_leaves + interior_alive : boundary_leaves);
        alive = std::move(next);
    }
    return out;
}

}  // namespace tow
