#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dompack {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  Oversize,
  Infeasible,
  Stalled,
  GuaranteeViolated,
  CertificateInvalid,
  SequenceInvalid,
  EncodingInvalid,
  NotFound,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Oversize: return "Oversize";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::Stalled: return "Stalled";
    case ErrorKind::GuaranteeViolated: return "GuaranteeViolated";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
    case ErrorKind::SequenceInvalid: return "SequenceInvalid";
    case ErrorKind::EncodingInvalid: return "EncodingInvalid";
    case ErrorKind::NotFound: return "NotFound";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dompack
