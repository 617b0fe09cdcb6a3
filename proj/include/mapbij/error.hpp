#ifndef GUARD_MAPBIJ_ERROR_HPP
#define GUARD_MAPBIJ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapbij
{

enum class ErrorKind
{
  DuplicateToken,
  UnknownToken,
  MissingToken,
  InvalidToken,
  AlphaFixedPoint,
  AlphaNotInvolution,
  NotTransitive,
  UnknownRoot,
  Parse,
  NotASpanningTree,
  EdgeInTree,
  EdgeNotInTree,
  SumMismatch,
  NotDirected,
  SameOrientationOnEdge,
  OutdegreeMismatch,
  NotAForest,
  NotAnOutdegreeSequence,
  VertexStable,
  NotRecurrent,
  NotV0Connected,
  CapExceeded,
  InvalidArgument,
  Internal
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &message);

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

class ParseError : public Error
{
public:
  ParseError(int line, int column, std::string const &message);

  int line() const noexcept { return _line; }
  int column() const noexcept { return _column; }

private:
  int _line;
  int _column;
};

[[noreturn]] void fail(ErrorKind kind, std::string const &message);

} // namespace mapbij

#endif // GUARD_MAPBIJ_ERROR_HPP
