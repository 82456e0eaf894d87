#include "grady/errors.hpp"

namespace grady {

  char const* to_string(ValidationError::Kind kind) noexcept {
    using K = ValidationError::Kind;
    switch (kind) {
      case K::Homogeneity: return "HomogeneityViolation";
      case K::Associativity: return "AssociativityViolation";
      case K::Identity: return "IdentityViolation";
      case K::Torsion: return "TorsionViolation";
      case K::Grading: return "GradingViolation";
      case K::ActionAssociativity: return "ActionAssociativityViolation";
      case K::IdentityAction: return "IdentityActionViolation";
      case K::Malformed: return "MalformedDescription";
    }
    return "ValidationError";
  }

}  // namespace grady
