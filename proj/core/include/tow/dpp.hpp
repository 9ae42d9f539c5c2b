#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tow/setup.hpp"

namespace tow {

/// One real value per point of X.
using ValueFunction = std::vector<double>;

/**
 * The data of the functional equation
 *
 *   u(x) = mu * max_{B(x)} u + (1-mu) * min_{B(x)} u + f(x)   on Y,
 *   u(x) = F(x)                                               on X\Y.
 *
 * `f` and `F` are stored per point; f is read on interior points only and F
 * on boundary points only. `Lambda` bounds the data, sup|F| + sup|f| <=
 * Lambda. `lambda_min` is a nonnegative lower margin with min_Y f >
 * lambda_min; lambda_min > 0 is what the convergence and uniqueness
 * guarantees need, iterate_once itself does not care.
 */
struct DppProblem {
    double mu = 0.5;
    std::vector<double> f;
    std::vector<double> F;
    double Lambda = 0.0;
    double lambda_min = 0.0;
};

/**
 * Builds a DppProblem, deriving Lambda = sup|F| + sup|f| and a default
 * lambda_min (half of min_Y f if that is positive, else 0).
 * Throws InvalidMuError.
 */
DppProblem make_problem(const AdmissibleSetup& setup, double mu, std::vector<double> f,
                        std::vector<double> F);

/// The interior update formula. Both the sweep and the strategy-enumeration
/// oracle must evaluate this identical expression so that they agree bitwise.
inline double dpp_rhs(double mu, double hi, double lo, double fx) {
    return mu * hi + (1.0 - mu) * lo + fx;
}

struct ConvergenceTrace {
    enum class Status { Converged, MaxIterations };
    struct Sweep {
        double step;      // sup |u_k - u_{k-1}|
        double residual;  // sup |u_k - T(u_k)|
        double sup;       // sup_X u_k
        double inf;       // inf_X u_k
    };
    std::vector<Sweep> sweeps;
    Status status = Status::MaxIterations;
    // set when min_Y f <= 0: the fixed point may exist but is not guaranteed
    // to be unique or attracting
    bool no_uniqueness_guarantee = false;
};

/**
 * One Jacobi sweep of the iteration: all reads come from the input u, the
 * result is F on the boundary and mu*max + (1-mu)*min + f over the ball on
 * the interior. Max/min scan the ball list in index order with exact
 * comparisons.
 */
ValueFunction iterate_once(const AdmissibleSetup& setup, const DppProblem& problem,
                           const ValueFunction& u);

/// sup_X |u - T(u)|; zero iff u solves the equation.
double residual(const AdmissibleSetup& setup, const DppProblem& problem, const ValueFunction& u);

/// u <= T(u) on the interior and u = F on the boundary, within `slack`.
bool is_subsolution(const AdmissibleSetup& setup, const DppProblem& problem,
                    const ValueFunction& u, double slack = 0.0);

/// u >= T(u) on the interior and u = F on the boundary, within `slack`.
bool is_supersolution(const AdmissibleSetup& setup, const DppProblem& problem,
                      const ValueFunction& u, double slack = 0.0);

struct SolveOptions {
    double tol = 1e-10;
    std::uint64_t max_sweeps = 1'000'000;
};

/**
 * Iterates until both the sup-norm step and the residual drop to `tol`, or
 * max_sweeps is reached (reported via the trace status, not an error).
 * Throws NonFiniteValueError if the iterates overflow.
 */
std::pair<ValueFunction, ConvergenceTrace> solve(const AdmissibleSetup& setup,
                                                 const DppProblem& problem,
                                                 const ValueFunction& u0,
                                                 const SolveOptions& opts = {});

}  // namespace tow
