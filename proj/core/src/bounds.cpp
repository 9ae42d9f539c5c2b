#include "tow/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace tow {

double standard_iteration_limit(double theta, double Lambda) {
    if (!(theta > 0.0 && theta < 1.0)) throw InvalidThetaError(theta);
    return Lambda / (1.0 - theta);
}

SystemWeights system_weights(int d, double mu) {
    if (d < 1) throw Error("d must be >= 1");
    if (!(mu > 0.0 && mu < 1.0)) throw InvalidMuError(mu);

    SystemWeights w;
    w.d = d;
    if (d == 1) {
        // b^k = a^k_1 obeys a^{k+1} <= mu * a^k + (2-mu) * Lambda directly.
        w.tau = 1.0;
        w.lambdas = {1.0};
        w.theta = mu;
        w.C_bound = (2.0 - mu) / (1.0 - mu);
        return w;
    }

    // geometric sum mu * sum_{b=0}^{d-2} (1-mu)^b = 1 - (1-mu)^{d-1}
    double geo = 1.0 - std::pow(1.0 - mu, d - 1);
    double upper = 1.0 / geo;  // exclusive bound on tau^{d-1}
    w.tau = std::pow(std::sqrt(upper), 1.0 / (d - 1));

    w.lambdas.resize(d);
    for (int alpha = 1; alpha <= d; ++alpha) {
        w.lambdas[alpha - 1] = std::pow(w.tau * (1.0 - mu), d - alpha);
    }

    // branch 1: mu * (1 + sum_{b=1}^{d-1} lambda_b / lambda_d), lambda_d = 1
    double sum_low = 0.0;
    for (int alpha = 1; alpha <= d - 1; ++alpha) sum_low += w.lambdas[alpha - 1];
    double branch1 = mu * (1.0 + sum_low);
    // branch 2: (1-mu) * lambda_{alpha+1} / lambda_alpha = 1/tau for all alpha
    double branch2 = 1.0 / w.tau;
    w.theta = std::max(branch1, branch2);

    // C_0 collects the Lambda coefficients of the collapsed recursion:
    // lambda_1 * (1-mu) from the a_0 term plus sum_alpha lambda_alpha.
    double c0 = w.lambdas[0] * (1.0 - mu);
    for (double l : w.lambdas) c0 += l;
    double min_lambda = *std::min_element(w.lambdas.begin(), w.lambdas.end());
    w.C_bound = c0 / ((1.0 - w.theta) * min_lambda);
    return w;
}

std::vector<double> system_fixed_point(int d, double mu, double Lambda) {
    if (d < 1) throw Error("d must be >= 1");
    if (!(mu > 0.0 && mu < 1.0)) throw InvalidMuError(mu);

    // Substituting forward, a_d = Lambda * (S_d + (1-mu)^d) / (1 - mu*S_d)
    // with S_d = sum_{j=0}^{d-1} (1-mu)^j, and 1 - mu*S_d = (1-mu)^d > 0.
    double one_minus = 1.0 - mu;
    double s = 0.0;
    double pw = 1.0;
    for (int j = 0; j < d; ++j) {
        s += pw;
        pw *= one_minus;
    }
    double denom = 1.0 - mu * s;
    if (!(denom > 0.0)) throw SingularSystemError();
    std::vector<double> a(d + 1);
    a[0] = Lambda;
    a[d] = Lambda * (s + pw) / denom;
    for (int alpha = 1; alpha < d; ++alpha) {
        a[alpha] = mu * a[d] + one_minus * a[alpha - 1] + Lambda;
    }
    return a;
}

double boundedness_constant(int d, double mu, double Lambda) {
    return system_weights(d, mu).C_bound * Lambda;
}

}  // namespace tow
