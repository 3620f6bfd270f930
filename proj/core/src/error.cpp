#include "msp/error.hpp"

namespace msp {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

std::string_view to_string(ParseErrorKind kind) noexcept
{
    switch (kind) {
    case ParseErrorKind::MissingHeader: return "missing-header";
    case ParseErrorKind::MalformedHeader: return "malformed-header";
    case ParseErrorKind::DuplicateHeader: return "duplicate-header";
    case ParseErrorKind::UnknownDirective: return "unknown-directive";
    case ParseErrorKind::BadInteger: return "bad-integer";
    case ParseErrorKind::MissingSeparator: return "missing-separator";
    case ParseErrorKind::WrongPegCount: return "wrong-peg-count";
    case ParseErrorKind::ColorOutOfRange: return "color-out-of-range";
    case ParseErrorKind::ScoreOutOfRange: return "score-out-of-range";
    case ParseErrorKind::VertexOutOfRange: return "vertex-out-of-range";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::DuplicateEdge: return "duplicate-edge";
    case ParseErrorKind::EdgeCountMismatch: return "edge-count-mismatch";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
  : Error(ErrorKind::Parse,
          "line " + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " + detail),
    _parse_kind(kind),
    _line(line)
{
}

} // namespace msp
