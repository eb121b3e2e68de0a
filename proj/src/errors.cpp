#include "matfun/errors.hpp"

namespace matfun {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::PoleAtNode: return "PoleAtNode";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
        case ErrorKind::NodesTooClose: return "NodesTooClose";
        case ErrorKind::IllConditioned: return "IllConditioned";
        case ErrorKind::DegenerateCondition: return "DegenerateCondition";
        case ErrorKind::NodeCollision: return "NodeCollision";
        case ErrorKind::NonRealInput: return "NonRealInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::InconsistentMultiplicities: return "InconsistentMultiplicities";
        case ErrorKind::PoleAtEigenvalue: return "PoleAtEigenvalue";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::IdentityCheckFailed: return "IdentityCheckFailed";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::DependentCycles: return "DependentCycles";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
    }
    return "UnknownError";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace matfun
