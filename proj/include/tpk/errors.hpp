#ifndef TPK_ERRORS_HPP
#define TPK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct KindMismatch : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct DegreeCapExceeded : Error {
    using Error::Error;
};

// |denominator| below epsilon at an evaluation point
struct PoleError : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

// Ad_g + 1 singular, step-size failure, and friends
struct SingularError : Error {
    using Error::Error;
};

struct StepError : Error {
    using Error::Error;
};

} // namespace tpk

#endif
