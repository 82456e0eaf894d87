#pragma once

// Finite graded left modules over structure-constant rings.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grady/grading.hpp"
#include "grady/sc_fixtures.hpp"
#include "grady/sc_ring.hpp"
#include "grady/span.hpp"

namespace grady {

  using ModuleElement = CoeffVector;
  using MemberSet     = SpanEnumeration<ModuleElement>;

  struct ActionEntry {
    std::size_t  i;  // ring basis index
    std::size_t  j;  // module basis index
    SparseVector value;
  };

  struct ModuleSpec {
    std::vector<std::string>                basis_names;
    std::vector<GroupElement>               degrees;
    std::vector<std::vector<std::uint32_t>> torsion;  // empty means free
    std::vector<ActionEntry>                action;   // missing pairs act as zero
  };

  class GradedModule {
   public:
    using Element = ModuleElement;

    // Checks grading, associativity on basis triples and the identity
    // action exhaustively. Throws ValidationError.
    static GradedModule build(StructureConstantRing ring, ModuleSpec spec);

    StructureConstantRing const& ring() const noexcept { return _ring; }
    ModuleSpec const&            spec() const noexcept { return _spec; }
    CoeffSpace const&            space() const noexcept { return _space; }
    FiniteGroup const&           group() const noexcept { return _ring.group(); }
    std::size_t                  basis_size() const noexcept { return _spec.degrees.size(); }
    GroupElement                 degree(std::size_t k) const { return _spec.degrees[k]; }

    ModuleElement zero() const { return _space.zero(); }
    ModuleElement basis(std::size_t k) const { return _space.unit(k); }
    ModuleElement act(RingElement const& a, ModuleElement const& m) const;

    std::vector<ModuleElement> component_elements(GroupElement h) const;
    std::uint64_t              cardinality() const;
    std::string                render(ModuleElement const& m) const { return _space.render(m, _spec.basis_names); }

   private:
    GradedModule(StructureConstantRing ring, ModuleSpec spec, CoeffSpace space)
        : _ring(std::move(ring)), _spec(std::move(spec)), _space(std::move(space)) {}

    StructureConstantRing     _ring;
    ModuleSpec                _spec;
    CoeffSpace                _space;
    std::vector<SparseVector> _act;  // i * basis_size + k
  };

  // Span of a * x over the given ring and module elements.
  MemberSet product_span(GradedModule const& M, std::vector<RingElement> const& as,
                         std::vector<ModuleElement> const& xs, std::size_t cap = kDefaultClosureCap);

  MemberSet component_span(GradedModule const& M, GroupElement h, std::size_t cap = kDefaultClosureCap);

  // S_g S_{g^-1} as a spanning list of ring elements.
  std::vector<RingElement> ideal_spanning(StructureConstantRing const& ring, GroupElement g);

  // Component sets of S(M) = sum_g S_g S_{g^-1} M_g. Verifies closure under
  // the full action and throws TheoremViolation otherwise.
  struct SubmoduleSets {
    std::vector<MemberSet> components;  // indexed by group element
  };

  SubmoduleSets S_of(GradedModule const& M, std::size_t cap = kDefaultClosureCap);
  // S(N) for a graded submodule given by its component sets.
  SubmoduleSets S_of(GradedModule const& M, SubmoduleSets const& N, std::size_t cap = kDefaultClosureCap);
  bool same_sets(SubmoduleSets const& a, SubmoduleSets const& b);

  Verdict is_symmetric_module(GradedModule const& M, std::size_t cap = kDefaultClosureCap);

  // S_g M_h = S_g S_{g^-1} M_{gh} for all g, h. When the ring is known to be
  // epsilon-strong a failure throws TheoremViolation.
  Verdict dade_condition(GradedModule const& M, Verdict const& ring_epsilon_strong,
                         std::size_t cap = kDefaultClosureCap);
  Verdict is_epsilon_strong_module(GradedModule const& M, std::size_t cap = kDefaultClosureCap);

  // The same equality inside the corner u S acting on u M, for g in H.
  Verdict corner_module_condition(GradedModule const& M, RingElement const& u, ElementSet const& H,
                                  std::size_t cap = kDefaultClosureCap);

  ////////////////////////////////////////////////////////////////////////
  // fixtures
  ////////////////////////////////////////////////////////////////////////

  GradedModule regular_module(StructureConstantRing const& ring);
  GradedModule zero_module(StructureConstantRing const& ring);

  // Column vectors over a 3x3 matrix fixture. Rows flagged in `ideal_rows`
  // take entries in B; `degrees` grades the rows.
  GradedModule column_module(MatrixFixture const& F, std::array<bool, 3> ideal_rows,
                             std::array<GroupElement, 3> degrees);

  // Over the trivial fixture: one degree-e generator and one degree-g
  // generator, with S acting through its identity. Not symmetric at g.
  GradedModule shifted_trivial_module(StructureConstantRing const& trivial, GroupElement g);

}  // namespace grady
