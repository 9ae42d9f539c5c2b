#pragma once

#include <vector>

#include "tow/errors.hpp"

namespace tow {

/**
 * Weights for the layered iteration
 *
 *   a^{k+1}_0     <= Lambda,
 *   a^{k+1}_alpha <= mu * a^k_d + (1-mu) * a^k_{alpha-1} + Lambda,
 *
 * collapsed to a scalar contraction b^k = sum_alpha lambda_alpha * a^k_alpha
 * with b^{k+1} <= theta * b^k + C_0, theta < 1.
 */
struct SystemWeights {
    int d = 1;
    double tau = 1.0;
    std::vector<double> lambdas;  // lambdas[alpha-1] for alpha = 1..d
    double theta = 0.0;
    double C_bound = 0.0;  // the assembled constant C(d, mu, Lambda=1)
};

/// limsup bound Lambda/(1-theta) for a^{k+1} <= theta * a^k + Lambda.
/// Throws InvalidThetaError.
double standard_iteration_limit(double theta, double Lambda);

/**
 * Picks tau as the geometric midpoint of its admissible interval
 * 1 < tau^{d-1} < (mu * sum_{b=0}^{d-2} (1-mu)^b)^{-1}, sets
 * lambda_alpha = (tau*(1-mu))^{d-alpha}, and evaluates both theta branches.
 * For d = 1 the system is scalar and theta = mu.
 */
SystemWeights system_weights(int d, double mu);

/**
 * The exact fixed point of the equality recursion a_0 = Lambda,
 * a_alpha = mu*a_d + (1-mu)*a_{alpha-1} + Lambda. Returned as (a_0 .. a_d).
 * This is the worst-case limsup any valid bound must dominate.
 */
std::vector<double> system_fixed_point(int d, double mu, double Lambda);

/**
 * The assembled constant C(d, mu, Lambda) = C_0 / ((1-theta) * min_alpha
 * lambda_alpha), which dominates limsup_k max_alpha a^k_alpha for every
 * sequence obeying the layered inequality recursion. Not optimized for
 * tightness.
 */
double boundedness_constant(int d, double mu, double Lambda);

}  // namespace tow
