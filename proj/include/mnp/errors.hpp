#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mnp {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

/// Input that parses but violates an operation's precondition.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParamsMismatch : public DomainError {
public:
    ParamsMismatch() : DomainError("group parameters do not match") {}
};

}  // namespace mnp
