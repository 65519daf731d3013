#include "mckay/error.hpp"

namespace mckay {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::ConductorOverflow: return "conductor overflow";
    case ErrorKind::UnsupportedGroup: return "unsupported group";
    case ErrorKind::ConstructionBug: return "construction bug";
    case ErrorKind::InternalError: return "internal error";
    case ErrorKind::NotACharacter: return "not a character";
    case ErrorKind::NotMcKay: return "not a McKay graph";
    case ErrorKind::NotAffine: return "not affine";
    case ErrorKind::Constraint: return "constraint violated";
    case ErrorKind::NotASink: return "not a sink";
    case ErrorKind::NotASource: return "not a source";
    case ErrorKind::Orientation: return "orientation error";
    case ErrorKind::Parity: return "parity error";
    case ErrorKind::Window: return "window error";
    case ErrorKind::Domain: return "out of domain";
    case ErrorKind::NotReal: return "not a real root";
    case ErrorKind::Sign: return "sign error";
    case ErrorKind::Unclassifiable: return "unclassifiable";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

}  // namespace mckay
