#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kato {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error in a sequence literal; `position` is a byte offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct SingularSystem : Error {
    using Error::Error;
};

struct SelfLoopUnsupported : Error {
    using Error::Error;
};

struct NotSimple : Error {
    using Error::Error;
};

struct IndexNotOne : Error {
    using Error::Error;
};

struct ZeroParameter : Error {
    using Error::Error;
};

struct EpsilonInconsistent : Error {
    using Error::Error;
};

}  // namespace kato
