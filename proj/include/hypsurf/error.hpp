#pragma once

#include <stdexcept>
#include <string>

namespace hypsurf {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidMatrix : public Error {
public:
    using Error::Error;
};

class InvalidPoint : public Error {
public:
    using Error::Error;
};

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

class NonPositiveScale : public Error {
public:
    using Error::Error;
};

class InvalidCoverElement : public Error {
public:
    using Error::Error;
};

class NotInKernel : public Error {
public:
    using Error::Error;
};

class RelationViolated : public Error {
public:
    using Error::Error;
};

class NonIntegral : public Error {
public:
    using Error::Error;
};

class GenusTooSmall : public Error {
public:
    using Error::Error;
};

class PairingFailed : public Error {
public:
    using Error::Error;
};

class DidNotConverge : public Error {
public:
    DidNotConverge(const std::string& what, double last_residual)
        : Error(what), last_residual_(last_residual) {}

    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

class InvalidLattice : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hypsurf
