// error.hpp -- exception types shared by every msp module

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace msp {

enum class ErrorKind {
    InvalidInput,
    ResourceLimit,
    Precondition,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), _kind(kind)
    {
    }

    ErrorKind kind() const noexcept { return _kind; }

private:
    ErrorKind _kind;
};

class InvalidInput : public Error
{
public:
    explicit InvalidInput(const std::string& message)
      : Error(ErrorKind::InvalidInput, message)
    {
    }
};

class ResourceLimit : public Error
{
public:
    explicit ResourceLimit(const std::string& message)
      : Error(ErrorKind::ResourceLimit, message)
    {
    }
};

class PreconditionFailed : public Error
{
public:
    explicit PreconditionFailed(const std::string& message)
      : Error(ErrorKind::Precondition, message)
    {
    }
};

/// Machine-readable reason attached to every ParseError.
enum class ParseErrorKind {
    MissingHeader,
    MalformedHeader,
    DuplicateHeader,
    UnknownDirective,
    BadInteger,
    MissingSeparator,
    WrongPegCount,
    ColorOutOfRange,
    ScoreOutOfRange,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    EdgeCountMismatch,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

/// Raised by the text parsers. `line()` is 1-based; 0 means "end of input".
class ParseError : public Error
{
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

    ParseErrorKind parse_kind() const noexcept { return _parse_kind; }
    std::size_t line() const noexcept { return _line; }

private:
    ParseErrorKind _parse_kind;
    std::size_t _line;
};

} // namespace msp
