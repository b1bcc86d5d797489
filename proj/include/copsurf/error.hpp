#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace copsurf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte position of the fault.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A size bound (graph6 order, state budget, search budget) was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A cop strategy was requested for a graph that is not k-copwin.
class NoStrategyError : public Error {
public:
    using Error::Error;
};

/// A strategy had no prescription (or an illegal one) for a reached state.
class StrategyHoleError : public Error {
public:
    using Error::Error;
};

/// A covering map failed the weak-cover condition where it was required.
class InvalidCoverError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed. Indicates a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace copsurf
