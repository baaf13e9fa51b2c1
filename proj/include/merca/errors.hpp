#pragma once

#include <stdexcept>
#include <string>

namespace merca {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitConstantTerm : Error {
    NonUnitConstantTerm() : Error("inverse requires constant term +1 or -1") {}
};

struct BadOrder : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct NotCoprime : Error {
    using Error::Error;
};

struct CaseMismatch : Error {
    using Error::Error;
};

struct BadParams : Error {
    using Error::Error;
};

struct UnknownPolynomial : Error {
    using Error::Error;
};

struct LeadingNotPositive : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace merca
