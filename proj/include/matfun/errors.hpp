#pragma once

#include <stdexcept>
#include <string>

namespace matfun {

// Domain error categories surfaced to callers and, through the CLI, to users.
enum class ErrorKind {
    PoleAtNode,
    Unsupported,
    DivisionByZeroPolynomial,
    NodesTooClose,
    IllConditioned,
    DegenerateCondition,
    NodeCollision,
    NonRealInput,
    DimensionMismatch,
    NoConvergence,
    InconsistentMultiplicities,
    PoleAtEigenvalue,
    SingularMatrix,
    IdentityCheckFailed,
    RankMismatch,
    DependentCycles,
    VerificationFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace matfun
