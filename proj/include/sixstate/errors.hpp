#pragma once

#include <stdexcept>
#include <string>

namespace sixstate {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianError : Error {
    using Error::Error;
};
struct NoConvergenceError : Error {
    using Error::Error;
};
struct NoBracketError : Error {
    using Error::Error;
};
struct BadPhotonNumberError : Error {
    using Error::Error;
};
struct NotDensityOperatorError : Error {
    using Error::Error;
};
struct BadDimensionError : Error {
    using Error::Error;
};
struct NotSymmetrizedError : Error {
    using Error::Error;
};
struct InfeasibleRError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct InfeasibleError : Error {
    using Error::Error;
};
struct NeglectViolationError : Error {
    using Error::Error;
};
struct ClosureOverflowError : Error {
    using Error::Error;
};

}  // namespace sixstate
