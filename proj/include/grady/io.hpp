#pragma once

// JSON descriptions of rings and modules.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grady/errors.hpp"
#include "grady/lpa.hpp"
#include "grady/module.hpp"
#include "grady/sc_ring.hpp"

namespace grady::io {

  using nlohmann::json;

  // `where` is a JSON pointer into the offending document.
  class ParseError : public Error {
   public:
    ParseError(std::string where, std::string const& what)
        : Error(where.empty() ? what : where + ": " + what), _where(std::move(where)) {}
    std::string const& where() const noexcept { return _where; }

   private:
    std::string _where;
  };

  struct RingInput {
    std::string                          source;  // fixture name or document kind
    std::optional<StructureConstantRing> sc;
    std::optional<LeavittAlgebra>        lpa;
  };

  json parse_text(std::string const& text);

  FiniteGroup parse_group(json const& j, std::string const& where);
  CoeffRing   parse_coeff(json const& j, std::string const& where);

  // Throws ParseError for shape problems; ring axioms surface as
  // ValidationError from the builders.
  RingInput    parse_ring(json const& doc);
  GradedModule parse_module(StructureConstantRing const& ring, json const& doc);

  json group_json(FiniteGroup const& G);
  json sparse_json(CoeffSpace const& space, CoeffVector const& v);
  json ring_json(StructureConstantRing const& ring);
  json leavitt_json(LeavittAlgebra const& L);
  json module_json(GradedModule const& M);

  std::vector<std::string> example_names();
  // Expanded description of a named example; throws ParseError if unknown.
  json example(std::string const& name);

}  // namespace grady::io
