#pragma once

#include <stdexcept>
#include <string>

namespace coalg {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rule produced (or a caller asked for) an index outside a declared family range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an input that does not meet its contract,
/// e.g. kantor() on a spec without a coderivation.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed text input: spec files, identity expressions, label syntax.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string where)
        : Error(where.empty() ? message : where + ": " + message), where_(std::move(where))
    {
    }

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace coalg
