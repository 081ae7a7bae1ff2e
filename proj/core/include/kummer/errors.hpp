#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

// Input violates a documented precondition (bad index, wrong prime, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The pair handed to an operation is singular where a nonsingular one is required.
class SingularDeltaError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Not enough p-adic or floating precision to certify a result; retry with more.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Indicates a bug or an inconsistent oracle.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError(what);
}

}  // namespace kummer
