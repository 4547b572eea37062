#include "nulab/error.hpp"

namespace nulab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedSparse6: return "MalformedSparse6";
    case ErrorKind::SinkWriteError: return "SinkWriteError";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::NoTwoFactor: return "NoTwoFactor";
    case ErrorKind::NotABridge: return "NotABridge";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::NotUnicyclic: return "NotUnicyclic";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::MissingProfileField: return "MissingProfileField";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace nulab
