#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace raagpath {

enum class ErrorKind {
  DuplicateVertex,
  LoopEdge,
  UnknownEndpoint,
  UnknownVertex,
  BadParameter,
  NotAMapOfGraphs,
  ImageEscapesCodomain,
  NotInduced,
  NotImmersion,
  StartMismatch,
  GraphMismatch,
  NotForest,
  RootMismatch,
  Disconnected,
  BaseMismatch,
  ProjectionMismatch,
  EmptyF,
  NotSurjective,
  EmptyGraph,
  CertificateGap,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code logic) can branch on it.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what);

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

/// Parse failures additionally record a 1-based line and column.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, int line, int column);

  int line() const noexcept { return _line; }
  int column() const noexcept { return _column; }

private:
  int _line;
  int _column;
};

} // namespace raagpath
