#pragma once

#include <stdexcept>
#include <string>

namespace wdk {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// A vector that must have pairwise distinct components has duplicates.
struct DistinctnessError : DomainError {
    DistinctnessError() : DomainError("vector components are not pairwise distinct") {}
    using DomainError::DomainError;
};

// f'(z) = 0 where a derivative-normalized quantity is requested.
struct CriticalPointError : Error {
    using Error::Error;
};

// A mixed difference between consecutive iterates vanished.
struct DegenerateGeometryError : Error {
    using Error::Error;
};

// An error bound's denominator is not positive; the bound does not exist.
struct BoundUndefinedError : Error {
    using Error::Error;
};

// The certification condition fails, so the requested guarantee cannot be given.
struct NotCertifiableError : Error {
    using Error::Error;
};

// A verified internal consistency condition failed; indicates a bug.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace wdk
