#include "tow/dpp.hpp"

#include <cmath>
#include <limits>

namespace tow {

DppProblem make_problem(const AdmissibleSetup& setup, double mu, std::vector<double> f,
                        std::vector<double> F) {
    if (!(mu > 0.0 && mu < 1.0)) throw InvalidMuError(mu);
    if (f.size() != setup.n_points || F.size() != setup.n_points) {
        throw Error("f and F must have one entry per point");
    }
    DppProblem p;
    p.mu = mu;
    p.f = std::move(f);
    p.F = std::move(F);
    double sup_f = 0.0;
    double sup_F = 0.0;
    double min_f = std::numeric_limits<double>::infinity();
    for (PointId x = 0; x < setup.n_points; ++x) {
        if (setup.interior(x)) {
            sup_f = std::max(sup_f, std::abs(p.f[x]));
            min_f = std::min(min_f, p.f[x]);
        } else {
            sup_F = std::max(sup_F, std::abs(p.F[x]));
        }
    }
    p.Lambda = sup_F + sup_f;
    p.lambda_min = min_f > 0.0 ? 0.5 * min_f : 0.0;
    return p;
}

ValueFunction iterate_once(const AdmissibleSetup& setup, const DppProblem& problem,
                           const ValueFunction& u) {
    ValueFunction next(setup.n_points);
    for (PointId x = 0; x < setup.n_points; ++x) {
        if (setup.boundary(x)) {
            next[x] = problem.F[x];
            continue;
        }
        const auto& ball = setup.balls[x];
        double hi = u[ball[0]];
        double lo = u[ball[0]];
        for (std::size_t i = 1; i < ball.size(); ++i) {
            double v = u[ball[i]];
            if (v > hi) hi = v;
            if (v < lo) lo = v;
        }
        next[x] = dpp_rhs(problem.mu, hi, lo, problem.f[x]);
    }
    return next;
}

double residual(const AdmissibleSetup& setup, const DppProblem& problem, const ValueFunction& u) {
    ValueFunction tu = iterate_once(setup, problem, u);
    double r = 0.0;
    for (PointId x = 0; x < setup.n_points; ++x) {
        r = std::max(r, std::abs(u[x] - tu[x]));
    }
    return r;
}

namespace {

bool one_sided(const AdmissibleSetup& setup, const DppProblem& problem, const ValueFunction& u,
               double slack, bool sub) {
    ValueFunction tu = iterate_once(setup, problem, u);
    for (PointId x = 0; x < setup.n_points; ++x) {
        if (setup.boundary(x)) {
            if (std::abs(u[x] - problem.F[x]) > slack) return false;
        } else if (sub ? (u[x] > tu[x] + slack) : (u[x] < tu[x] - slack)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_subsolution(const AdmissibleSetup& setup, const DppProblem& problem,
                    const ValueFunction& u, double slack) {
    return one_sided(setup, problem, u, slack, /*sub=*/true);
}

bool is_supersolution(const AdmissibleSetup& setup, const DppProblem& problem,
                      const ValueFunction& u, double slack) {
    return one_sided(setup, problem, u, slack, /*sub=*/false);
}

std::pair<ValueFunction, ConvergenceTrace> solve(const AdmissibleSetup& setup,
                                                 const DppProblem& problem,
                                                 const ValueFunction& u0,
                                                 const SolveOptions& opts) {
    if (!(opts.tol > 0.0)) throw Error("tol must be positive");

    ConvergenceTrace trace;
    double min_f = std::numeric_limits<double>::infinity();
    for (PointId x = 0; x < setup.n_points; ++x) {
        if (setup.interior(x)) min_f = std::min(min_f, problem.f[x]);
    }
    trace.no_uniqueness_guarantee = !(min_f > 0.0);

    auto supdiff = [&](const ValueFunction& a, const ValueFunction& b) {
        double s = 0.0;
        for (PointId x = 0; x < setup.n_points; ++x) s = std::max(s, std::abs(a[x] - b[x]));
        return s;
    };
    auto record = [&](const ValueFunction& u, double step, double res) {
        double hi = u[0];
        double lo = u[0];
        for (double v : u) {
            hi = std::max(hi, v);
            lo = std::min(lo, v);
        }
        trace.sweeps.push_back({step, res, hi, lo});
    };

    // The residual of u_k equals the step to u_{k+1}, so each sweep's trace
    // row is finalized once the next iterate is known.
    ValueFunction cur = u0;
    ValueFunction next = iterate_once(setup, problem, cur);
    double step = supdiff(next, cur);
    for (std::uint64_t k = 1; k <= opts.max_sweeps; ++k) {
        for (PointId x = 0; x < setup.n_points; ++x) {
            if (!std::isfinite(next[x])) throw NonFiniteValueError(x);
        }
        ValueFunction after = iterate_once(setup, problem, next);
        double next_step = supdiff(after, next);
        record(next, step, next_step);
        if (step <= opts.tol && next_step <= opts.tol) {
            trace.status = ConvergenceTrace::Status::Converged;
            return {std::move(next), std::move(trace)};
        }
        cur = std::move(next);
        next = std::move(after);
        step = next_step;
    }
    trace.status = ConvergenceTrace::Status::MaxIterations;
    return {std::move(cur), std::move(trace)};
}

}  // namespace tow
