#include "mapbij/error.hpp"

namespace mapbij
{

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::DuplicateToken: return "DuplicateToken";
  case ErrorKind::UnknownToken: return "UnknownToken";
  case ErrorKind::MissingToken: return "MissingToken";
  case ErrorKind::InvalidToken: return "InvalidToken";
  case ErrorKind::AlphaFixedPoint: return "AlphaFixedPoint";
  case ErrorKind::AlphaNotInvolution: return "AlphaNotInvolution";
  case ErrorKind::NotTransitive: return "NotTransitive";
  case ErrorKind::UnknownRoot: return "UnknownRoot";
  case ErrorKind::Parse: return "ParseError";
  case ErrorKind::NotASpanningTree: return "NotASpanningTree";
  case ErrorKind::EdgeInTree: return "EdgeInTree";
  case ErrorKind::EdgeNotInTree: return "EdgeNotInTree";
  case ErrorKind::SumMismatch: return "SumMismatch";
  case ErrorKind::NotDirected: return "NotDirected";
  case ErrorKind::SameOrientationOnEdge: return "SameOrientationOnEdge";
  case ErrorKind::OutdegreeMismatch: return "OutdegreeMismatch";
  case ErrorKind::NotAForest: return "NotAForest";
  case ErrorKind::NotAnOutdegreeSequence: return "NotAnOutdegreeSequence";
  case ErrorKind::VertexStable: return "VertexStable";
  case ErrorKind::NotRecurrent: return "NotRecurrent";
  case ErrorKind::NotV0Connected: return "NotV0Connected";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::Internal: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const &message)
  : std::runtime_error(std::string(to_string(kind)) + ": " + message),
    _kind(kind)
{}

ParseError::ParseError(int line, int column, std::string const &message)
  : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                               std::to_string(column) + ": " + message),
    _line(line),
    _column(column)
{}

void fail(ErrorKind kind, std::string const &message)
{
  throw Error(kind, message);
}

} // namespace mapbij
