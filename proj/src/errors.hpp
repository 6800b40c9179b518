#pragma once

#include <stdexcept>
#include <string>

namespace mixmeas {

enum class ErrorKind {
    InvalidArgument,  // malformed parameters (wrong counts, NaN, ...)
    Validation,       // a constructor invariant failed (origin not interior, non-convex, ...)
    Unsupported,      // operation needs smoothness the body does not have
    Ambiguous,        // gauge maximizer not unique within tolerance
    Numerical,        // quadrature or refinement failed to converge
    Precondition,     // caller violated an operation precondition
    Range,            // requested regime is outside the representable range
    Assertion,        // an internal consistency check of verify/compare failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace mixmeas
