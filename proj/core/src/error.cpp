#include "cfbayes/error.hpp"

namespace cfbayes {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::MassNotOne: return "MassNotOne";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
    case ErrorKind::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorKind::UnknownAttribute: return "UnknownAttribute";
    case ErrorKind::ZeroProbabilityEvidence: return "ZeroProbabilityEvidence";
    case ErrorKind::ContradictoryCertainty: return "ContradictoryCertainty";
    case ErrorKind::EverythingSkipped: return "EverythingSkipped";
    case ErrorKind::NotSameDirection: return "NotSameDirection";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace cfbayes
