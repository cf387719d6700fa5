#ifndef INCGEO_ERRORS_HPP
#define INCGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace incgeo {

enum class ErrorCode {
  NotAGroup,
  UnsupportedSpec,
  NotSubgroup,
  NotNormal,
  NotSimple,
  NotProper,
  TypeNotUsed,
  EmptyGraph,
  UnknownVertex,
  DuplicateVertex,
  TrivialGroup,
  PreconditionDegree,
  PreconditionFlag,
  AuditFailure,
  ResourceLimit,
  GroupTooLarge,
  Incoherent,
  ParseError,
  OutOfRange,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::TypeNotUsed: return "TypeNotUsed";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::PreconditionDegree: return "PreconditionDegree";
    case ErrorCode::PreconditionFlag: return "PreconditionFlag";
    case ErrorCode::AuditFailure: return "AuditFailure";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::Incoherent: return "Incoherent";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace incgeo

#endif  // INCGEO_ERRORS_HPP
