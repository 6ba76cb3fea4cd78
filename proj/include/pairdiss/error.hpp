#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pairdiss {

enum class ErrorCode {
  InvalidArgument,
  InvalidState,
  SingularSystem,
  NonPhysical,
  IntegratorUnstable,
  Io,
  Usage,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::InvalidState: return "invalid_state";
    case ErrorCode::SingularSystem: return "singular_system";
    case ErrorCode::NonPhysical: return "non_physical";
    case ErrorCode::IntegratorUnstable: return "integrator_unstable";
    case ErrorCode::Io: return "io";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

/// Library error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pairdiss
