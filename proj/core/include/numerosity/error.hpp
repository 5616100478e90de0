#pragma once

#include <stdexcept>
#include <string>

namespace numerosity {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong" catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called with operands that violate its precondition
// (window mismatch, subset relation not holding, counts differing, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace numerosity
