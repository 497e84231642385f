#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace berge {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class MoveError { SourceNotFull, DestinationNotVacant };

class IllegalMove : public std::runtime_error {
public:
    IllegalMove(MoveError kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    MoveError kind() const noexcept { return kind_; }

private:
    MoveError kind_;
};

// Raised by the notation parser; position is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " at offset " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A runtime-checked construction invariant failed (e.g. a broken induction).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace berge
