#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace grady {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised while building a ring or module whose table breaks an axiom.
  // `indices` names the offending basis indices, in the order they were
  // combined.
  class ValidationError : public Error {
   public:
    enum class Kind {
      Homogeneity,
      Associativity,
      Identity,
      Torsion,
      Grading,
      ActionAssociativity,
      IdentityAction,
      Malformed
    };

    ValidationError(Kind kind, std::vector<std::size_t> indices,
                    std::string const& what)
        : Error(what), _kind(kind), _indices(std::move(indices)) {}

    Kind kind() const noexcept { return _kind; }
    std::vector<std::size_t> const& indices() const noexcept {
      return _indices;
    }

   private:
    Kind                     _kind;
    std::vector<std::size_t> _indices;
  };

  char const* to_string(ValidationError::Kind kind) noexcept;

  // Enumeration would exceed the configured member cap.
  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::size_t limit)
        : Error("closure exceeds cap of " + std::to_string(limit)
                + " elements"),
          _limit(limit) {}
    std::size_t limit() const noexcept { return _limit; }

   private:
    std::size_t _limit;
  };

  // A statement that holds for every instance failed on this one. Always an
  // implementation bug, never a property of the input.
  class TheoremViolation : public Error {
   public:
    using Error::Error;
  };

  // Two independent routes to the same verdict disagree.
  class InternalInconsistency : public Error {
   public:
    using Error::Error;
  };

  class NotCentralInR : public Error {
   public:
    using Error::Error;
  };

  class NonIdempotentProduct : public Error {
   public:
    using Error::Error;
  };

  class MinimalityContradiction : public Error {
   public:
    using Error::Error;
  };

}  // namespace grady
