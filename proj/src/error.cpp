#include "raagpath/error.hpp"

namespace raagpath {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::DuplicateVertex: return "DuplicateVertex";
  case ErrorKind::LoopEdge: return "LoopEdge";
  case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
  case ErrorKind::UnknownVertex: return "UnknownVertex";
  case ErrorKind::BadParameter: return "BadParameter";
  case ErrorKind::NotAMapOfGraphs: return "NotAMapOfGraphs";
  case ErrorKind::ImageEscapesCodomain: return "ImageEscapesCodomain";
  case ErrorKind::NotInduced: return "NotInduced";
  case ErrorKind::NotImmersion: return "NotImmersion";
  case ErrorKind::StartMismatch: return "StartMismatch";
  case ErrorKind::GraphMismatch: return "GraphMismatch";
  case ErrorKind::NotForest: return "NotForest";
  case ErrorKind::RootMismatch: return "RootMismatch";
  case ErrorKind::Disconnected: return "Disconnected";
  case ErrorKind::BaseMismatch: return "BaseMismatch";
  case ErrorKind::ProjectionMismatch: return "ProjectionMismatch";
  case ErrorKind::EmptyF: return "EmptyF";
  case ErrorKind::NotSurjective: return "NotSurjective";
  case ErrorKind::EmptyGraph: return "EmptyGraph";
  case ErrorKind::CertificateGap: return "CertificateGap";
  case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const &what)
  : std::runtime_error(std::string(to_string(kind)) + ": " + what), _kind(kind)
{}

ParseError::ParseError(std::string const &what, int line, int column)
  : Error(ErrorKind::ParseError,
          what + " (line " + std::to_string(line) + ", column " +
            std::to_string(column) + ")"),
    _line(line), _column(column)
{}

} // namespace raagpath
