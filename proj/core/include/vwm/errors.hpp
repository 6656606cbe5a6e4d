#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vwm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A raw trade violated a Trade invariant. `row()` is the 0-based input row.
class ValidationError : public Error
{
public:
    ValidationError(std::size_t row, std::string const& reason)
        : Error("row " + std::to_string(row) + ": " + reason), row_(row), reason_(reason)
    {
    }

    /// Same, reported against a 1-based line of an input file.
    ValidationError(std::size_t row, std::string const& reason, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + reason), row_(row), reason_(reason)
    {
    }

    std::size_t row() const noexcept { return row_; }
    std::string const& reason() const noexcept { return reason_; }

private:
    std::size_t row_;
    std::string reason_;
};

class EmptyWindow : public Error
{
public:
    EmptyWindow() : Error("window contains no trades") {}
    explicit EmptyWindow(std::string const& what) : Error(what) {}
};

class DegreeOutOfRange : public Error
{
public:
    using Error::Error;
};

class DegenerateDenominator : public Error
{
public:
    using Error::Error;
};

class LagTooLarge : public Error
{
public:
    using Error::Error;
};

class UnsupportedWindowOverlap : public Error
{
public:
    using Error::Error;
};

class TruncationOrderOutOfRange : public Error
{
public:
    using Error::Error;
};

/// Malformed input file. `line()` is 1-based and counts the header.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace vwm
