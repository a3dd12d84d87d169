#include "bergesat/error.hpp"

namespace bergesat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::EqualVertices: return "EqualVertices";
    case ErrorKind::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace bergesat
