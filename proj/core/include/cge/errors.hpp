#pragma once

#include <stdexcept>
#include <string>

namespace cge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resource guards share a base so the CLI can map them to one exit code.
struct ResourceGuard : Error {
    using Error::Error;
};

struct EmptyGraph : Error { using Error::Error; };
struct NotACover : Error { using Error::Error; };
struct TypeSpaceTooLarge : ResourceGuard { using ResourceGuard::ResourceGuard; };
struct NotEulerian : Error { using Error::Error; };
struct StartNotInGraph : Error { using Error::Error; };
struct TreeNotSpanning : Error { using Error::Error; };
struct SearchBudgetExceeded : ResourceGuard { using ResourceGuard::ResourceGuard; };
struct OddDegree : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct NotIndependent : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct InfeasibleAllocation : Error { using Error::Error; };
struct ImmediateNo : Error { using Error::Error; };
struct NotExact : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

}  // namespace cge
