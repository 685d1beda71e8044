#pragma once

#include <stdexcept>
#include <string>

namespace legch {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    TooLarge,
    UnknownGenerator,
    DuplicateGenerator,
    NotQuarterOdd,
    MissingHeights,
    EvenParameter,
    TooSmall,
    ClosureReferenced,
    NotDegreeOne,
    PrefixCollision,
    EmptyList,
    RIIGeneralHolonomyUnsupported,
    MalformedDifferential,
    StaleEvent,
    NotAnEndomorphism,
    NotDegreePreserving,
    FlyCollision,
    NotDegreeZeroMarker,
    BadSummand,
    BadPower,
    SchemaError,
};

const char* to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library; `code()` identifies the
/// failure so callers (and the CLI exit-status mapping) can branch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace legch
