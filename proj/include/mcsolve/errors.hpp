#pragma once

#include <stdexcept>
#include <string>

namespace mcs {

/// Malformed edge-list or certificate text. Carries the 1-based line number.
class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A configured search cap was exceeded before the exact answer was known.
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class ContractError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace mcs
