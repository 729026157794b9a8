#pragma once

#include <stdexcept>
#include <string>

namespace toda {

// Error categories mirrored by the CLI exit codes: usage problems map to
// exit 2, domain errors to exit 3.
enum class ErrorCode {
    ZeroDirection,
    EmptyChain,
    DetNotOne,
    ZeroMatrix,
    NonSingular,
    DegreeZero,
    NonIdentityPrefix,
    InfiniteArgument,
    ArgumentNotInUpperHalfPlane,
    SingularMatrix,
    IdenticallyInfinite,
    NotATransferMatrix,
    NonRationalCoefficient,
    SyntaxError,
    IncompatibleInput,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace toda
