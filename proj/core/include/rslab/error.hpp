#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rslab {

/// Machine-readable failure category. Every error raised by the library
/// carries exactly one of these; the CLI maps them onto exit codes.
enum class ErrorKind {
    Usage,            // unknown command, missing or malformed parameter
    InvalidArgument,  // well-formed input violating an operation's precondition
    Domain,           // mathematical domain error (division by zero, reducible modulus)
    Guard,            // enumeration / compute guard exceeded
    Computation,      // randomized procedure exhausted its trial budget
    Internal,         // violated internal invariant (a bug)
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Usage: return "usage";
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Guard: return "guard";
        case ErrorKind::Computation: return "computation";
        case ErrorKind::Internal: return "internal";
    }
    return "internal";
}

constexpr int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Usage:
        case ErrorKind::InvalidArgument:
        case ErrorKind::Domain: return 2;
        case ErrorKind::Guard: return 3;
        case ErrorKind::Computation: return 4;
        case ErrorKind::Internal: return 5;
    }
    return 5;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Throws Internal when an invariant that the code itself maintains is broken.
inline void ensure(bool condition, std::string_view what) {
    if (!condition) throw Error(ErrorKind::Internal, std::string("internal invariant violated: ") + std::string(what));
}

}  // namespace rslab
