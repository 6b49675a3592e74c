#pragma once

#include <stdexcept>
#include <string>

namespace tms {

enum class ErrorCode {
    DuplicateDevice,
    DuplicateUser,
    UnknownDevice,
    UnknownUser,
    OutOfRange,
    SelfAssertion,
    SelfLink,
    InvalidParams,
    FeedParseError,
    UnknownAttackVector,
    NegativeElapsed,
    ReorderedEvent,
    MalformedPayload,
    SnapshotFormatError,
    ScenarioError,
    IoError,
};

const char* error_code_name(ErrorCode code);

/// Engine error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tms
