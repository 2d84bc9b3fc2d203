#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfbayes {

enum class ErrorKind {
  LengthMismatch,
  NegativeMass,
  MassNotOne,
  SpaceTooLarge,
  InvalidSpace,
  DuplicateAttribute,
  UnknownAttribute,
  ZeroProbabilityEvidence,
  ContradictoryCertainty,
  EverythingSkipped,
  NotSameDirection,
  UnknownFamily,
  InvalidPartition,
  InvalidArgument,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cfbayes
