#pragma once

#include <stdexcept>
#include <string>

namespace multitor {

enum class ErrorCode {
    UnknownVariable,
    MalformedTerm,
    ZeroCharacteristicOverflow,
    InvalidField,
    RingMismatch,
    LengthMismatch,
    RankMismatch,
    ShapeMismatch,
    ZeroDivisorArgument,
    NotFiniteDimensional,
    NotZeroDimensional,
    HasRelations,
    AmbientMismatch,
    NotContained,
    IllFormed,
    LengthNotLocal,
    TargetMismatch,
    IllFormedMap,
    ZeroScalar,
    ZeroDivisorGenerator,
    ResolutionTruncated,
    DegreeOutOfRange,
    SyntaxError,
    UndeclaredName,
    DuplicateName,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond)
        fail(code, msg);
}

} // namespace multitor
