#pragma once

#include <stdexcept>
#include <string>

namespace heun {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated operation precondition or invalid input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class PoleError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Quadrature not converged, overflow, series cap reached.
class NumericError : public Error {
public:
    using Error::Error;
};

class BranchPointError : public NumericError {
public:
    using NumericError::NumericError;
};

inline void require(bool condition, const std::string& what)
{
    if (!condition) throw PreconditionError(what);
}

} // namespace heun
