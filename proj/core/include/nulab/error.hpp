#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nulab {

enum class ErrorKind {
  LoopRejected,
  IndexOutOfRange,
  MalformedGraph6,
  MalformedSparse6,
  SinkWriteError,
  NotCubic,
  NotPerfect,
  NoTwoFactor,
  NotABridge,
  NotAForest,
  NotUnicyclic,
  BadParameter,
  NotInClass,
  MissingProfileField,
  UnknownFamily,
  TooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to a stable message or exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nulab
