#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convball {

// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scalar argument outside the valid interval (pole crossed, constants invalid,
// iterate left the declared domain, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// No sign change found when bracketing the smallest positive root of H_i/M_i.
class NoRootError : public Error {
public:
    NoRootError(int index, const std::string& msg) : Error(msg), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

// Jacobian factorization hit a pivot below the singularity threshold.
class SingularJacobianError : public Error {
public:
    using Error::Error;
};

// Expression text could not be tokenized/parsed; position is a 0-based offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& msg)
        : Error(msg + " (at offset " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Expression/variable count mismatch, or a variable index beyond the system size.
class ArityError : public Error {
public:
    using Error::Error;
};

// Evaluation left the function's domain (log of nonpositive, division by zero, ...).
class EvalDomainError : public Error {
public:
    using Error::Error;
};

// Too few usable samples for the computational-order estimate.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// x0 lies outside the convergence ball; bound verification would be vacuous.
class BallViolationError : public Error {
public:
    using Error::Error;
};

}  // namespace convball
