#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// setup
struct NoBoundaryError : Error {
    NoBoundaryError() : Error("setup has no boundary points") {}
};
struct NoInteriorError : Error {
    NoInteriorError() : Error("setup has no interior points") {}
};
struct EmptyBallError : Error {
    explicit EmptyBallError(std::uint32_t p)
        : Error("interior point " + std::to_string(p) + " has an empty ball"), point(p) {}
    std::uint32_t point;
};
struct NotAdmissibleError : Error {
    explicit NotAdmissibleError(std::uint32_t p, const std::string& why)
        : Error("point " + std::to_string(p) + " violates admissibility: " + why), point(p) {}
    std::uint32_t point;
};

// dpp_core
struct InvalidMuError : Error {
    explicit InvalidMuError(double mu)
        : Error("mu = " + std::to_string(mu) + " is outside (0,1)") {}
};
struct NonFiniteValueError : Error {
    explicit NonFiniteValueError(std::uint32_t p)
        : Error("value function became non-finite at point " + std::to_string(p)), point(p) {}
    std::uint32_t point;
};

// bounds
struct InvalidThetaError : Error {
    explicit InvalidThetaError(double theta)
        : Error("theta = " + std::to_string(theta) + " is outside (0,1)") {}
};
struct SingularSystemError : Error {
    SingularSystemError() : Error("layer fixed-point system is singular") {}
};

// trees
struct NotStrictlyBinaryError : Error {
    explicit NotStrictlyBinaryError(std::size_t arity)
        : Error("node has " + std::to_string(arity) + " children, want 0 or 2") {}
};
struct HypothesisNotSatisfiedError : Error {
    HypothesisNotSatisfiedError() : Error("tree does not satisfy the interior-mass estimate") {}
};

// strategy
struct InvalidStrategyError : Error {
    using Error::Error;
};
struct BudgetExceededError : Error {
    explicit BudgetExceededError(std::uint64_t budget)
        : Error("enumeration exceeded node budget " + std::to_string(budget)) {}
};
struct LambdaNotPositiveError : Error {
    explicit LambdaNotPositiveError(double lambda)
        : Error("lambda = " + std::to_string(lambda) + " must be positive") {}
};

// instances
struct InvalidCountsError : Error {
    using Error::Error;
};

// io
struct ParseError : Error {
    using Error::Error;
};

}  // namespace tow
