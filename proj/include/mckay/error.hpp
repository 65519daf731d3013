#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

enum class ErrorKind {
  DivisionByZero,
  ConductorOverflow,
  UnsupportedGroup,
  ConstructionBug,
  InternalError,
  NotACharacter,
  NotMcKay,
  NotAffine,
  Constraint,
  NotASink,
  NotASource,
  Orientation,
  Parity,
  Window,
  Domain,
  NotReal,
  Sign,
  Unclassifiable,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every failure surfaced by the library carries a kind so callers (and the
// CLI) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mckay
