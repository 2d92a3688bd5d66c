#pragma once

#include <stdexcept>
#include <string>

namespace nonarch {

// Error taxonomy shared by the whole kernel. The C API and the CLI map these
// onto status/exit codes; the names themselves are part of the error contract
// (a CLI failure message always starts with the error name).
enum class ErrorCode {
    IndeterminateValuation,
    PrecisionExceeded,
    StalledExpansion,
    InsufficientPrecision,
    InseparableInput,
    InvalidParams,
    NegativeDifferent,
    NotNested,
    Inconsistent,
    BadMetadata,
    DuplicateRewrite,
    ChainTooShort,
    SplitRadiusViolated,
    MissingRootsOfUnity,
    PreconditionViolated,
    SpecTooShallow,
    ParseError,
};

const char* error_name(ErrorCode code);

class KernelError : public std::runtime_error {
public:
    KernelError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
    throw KernelError(code, detail);
}

} // namespace nonarch
