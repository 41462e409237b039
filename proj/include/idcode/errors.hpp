#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idcode {

// Base for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed edge-list text or an invalid edge (out-of-range id, self-loop).
class ParseError : public Error {
  public:
    using Error::Error;
};

enum class Precondition {
    Disconnected,
    TooSmall,
    NotBipartite,
    TwinsDeg2,
    NotTwinFree,
    IsP4,
    LeafRemovalNotIdentifiable,
    NotIdentifiable,
    IsolatedVertex,
    InvalidParameter,
    TooLarge,
};

auto to_string(Precondition p) -> std::string_view;

// A graph (or parameter) does not satisfy what an operation requires.
class PreconditionError : public Error {
  public:
    PreconditionError(Precondition which, const std::string & detail) :
        Error(std::string(to_string(which)) + ": " + detail),
        which_(which)
    {
    }

    auto which() const -> Precondition { return which_; }

  private:
    Precondition which_;
};

// A construction produced a code that failed verification. Only raised when a
// proof's guarantee is contradicted, so it signals a genuine counterexample.
class ConstructionFailure : public Error {
  public:
    using Error::Error;
};

// A survey found an instance that breaks a stated bound.
class BoundViolation : public Error {
  public:
    using Error::Error;
};

} // namespace idcode
