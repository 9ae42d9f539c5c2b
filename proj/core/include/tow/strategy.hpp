#pragma once

#include <cstdint>

#include "tow/dpp.hpp"
#include "tow/trees.hpp"

namespace tow {

/**
 * A strictly binary game tree with a point attached to each node. The root
 * carries the origin; at every interior (non-leaf) node the label is an
 * interior point and both children's labels lie in its ball. Left children
 * are the maximizing player's moves, right children the minimizing
 * player's. Leaves above the depth horizon carry boundary points.
 */
struct LabeledStrategy {
    GameTree tree;
    std::vector<PointId> labels;  // one per tree node
    PointId origin = 0;
    int horizon = 0;  // the depth bound L the strategy was built for
};

/// Checks the LabeledStrategy invariants against the setup; throws
/// InvalidStrategyError.
void check_strategy(const AdmissibleSetup& setup, const LabeledStrategy& s);

/**
 * The greedy optimal strategy tree for the value function u: at each
 * interior node of depth < L, the left child is the argmax of u over the
 * ball and the right child the argmin, ties broken by smallest point id.
 * Branches stop at boundary points or at depth L, so the result is already
 * in reduced form.
 */
LabeledStrategy extract_strategy_tree(const AdmissibleSetup& setup, const DppProblem& problem,
                                      const ValueFunction& u, PointId x, int L);

/**
 * The weighted tree sum
 *
 *   f(x_0) + sum_{t interior, t != root} m(t) f(x_t)
 *          + sum_{t leaf, boundary}      m(t) F(x_t)
 *          + sum_{t leaf, interior}      m(t) v(x_t),
 *
 * with m(t) = mu^{l(t)} (1-mu)^{r(t)}. For a boundary origin the value is
 * F(origin).
 */
double evaluate_w(const AdmissibleSetup& setup, const DppProblem& problem,
                  const LabeledStrategy& s, const ValueFunction& v);

/**
 * Brute-force infsup over all depth-L strategies by backward quantifier
 * elimination, sup over the left (max player) choice of inf over the right
 * (min player) choice at every node, enumerating ball choices exhaustively.
 * Equals L applications of iterate_once to v at x, bitwise: both paths
 * evaluate the same dpp_rhs expression over the same operands.
 *
 * Throws BudgetExceededError when more than `node_budget` nodes expand.
 */
double iterated_value_oracle(const AdmissibleSetup& setup, const DppProblem& problem,
                             const ValueFunction& v, PointId x, int L,
                             std::uint64_t node_budget = 1'000'000);

/// C(Lambda, lambda) = max((Lambda + 1 - lambda)/lambda, 2*Lambda/lambda),
/// the interior-vs-leaf mass constant satisfied by optimal strategy trees.
struct TiterConstant {
    double value = 0.0;
};

/// Throws LambdaNotPositiveError when lambda <= 0.
TiterConstant titer_constant(double Lambda, double lambda);
TiterConstant titer_constant(const DppProblem& problem);

/// Interior mass <= C + C * leaf mass on the strategy's tree.
bool verify_titer(const LabeledStrategy& s, double mu, double c_titer);

/**
 * Mass profile of the depth-L greedy strategy tree computed over the
 * argmax/argmin successor map instead of an explicit arena, so deep
 * horizons stay linear in n*L. Matches mass_profile(extracted tree).
 */
MassProfile strategy_mass_profile(const AdmissibleSetup& setup, const ValueFunction& u,
                                  PointId x, int L, double mu);

}  // namespace tow
