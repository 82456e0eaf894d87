#pragma once

// Finite unital G-graded algebras given by structure constants.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grady/coeff.hpp"
#include "grady/coeff_vector.hpp"
#include "grady/group.hpp"
#include "grady/span.hpp"

namespace grady {

  using RingElement = CoeffVector;

  struct ProductEntry {
    std::size_t  i;
    std::size_t  j;
    SparseVector value;
  };

  // Raw description of a structure-constant ring; validated by
  // StructureConstantRing::build.
  struct ScRingSpec {
    CoeffRing                               coeff;
    FiniteGroup                             group;
    std::vector<std::string>                basis_names;
    std::vector<GroupElement>               degrees;
    // Per basis element, per coefficient component: the additive order of
    // the basis element. Empty means free.
    std::vector<std::vector<std::uint32_t>> torsion;
    SparseVector                            one;
    std::vector<ProductEntry>               table;  // missing pairs are zero
  };

  class StructureConstantRing {
   public:
    using Element = RingElement;

    // Exhaustive validation: torsion compatibility, homogeneity,
    // associativity on basis triples, two-sided identity lying in degree e.
    // Throws ValidationError.
    static StructureConstantRing build(ScRingSpec spec);

    ScRingSpec const&  spec() const noexcept { return _spec; }
    CoeffSpace const&  space() const noexcept { return _space; }
    CoeffRing const&   coeff() const noexcept { return _space.coeff(); }
    FiniteGroup const& group() const noexcept { return _spec.group; }
    std::size_t        basis_size() const noexcept { return _spec.degrees.size(); }
    GroupElement degree(std::size_t i) const { return _spec.degrees[i]; }
    std::string const& basis_name(std::size_t i) const {
      return _spec.basis_names[i];
    }

    RingElement zero() const { return _space.zero(); }
    RingElement one() const { return _one; }
    RingElement basis(std::size_t i) const { return _space.unit(i); }

    RingElement add(RingElement const& a, RingElement const& b) const {
      return _space.add(a, b);
    }
    RingElement sub(RingElement const& a, RingElement const& b) const {
      return _space.sub(a, b);
    }
    RingElement neg(RingElement const& a) const { return _space.neg(a); }
    RingElement scale(Scalar c, RingElement const& a) const {
      return _space.scale(c, a);
    }
    RingElement multiply(RingElement const& a, RingElement const& b) const;

    SparseVector const& basis_product(std::size_t i, std::size_t j) const {
      return _mult[i * basis_size() + j];
    }

    // Basis indices of degree g; empty means S_g = 0.
    std::vector<std::size_t> component_basis(GroupElement g) const;
    std::vector<RingElement> component_elements(GroupElement g) const;
    RingElement homogeneous_part(RingElement const& a, GroupElement g) const;
    bool is_homogeneous(RingElement const& a, GroupElement g) const;

    // Number of elements of S (the basis gives a direct sum of cyclic
    // coefficient modules).
    std::uint64_t cardinality() const;

    std::string render(RingElement const& a) const {
      return _space.render(a, _spec.basis_names);
    }

   private:
    StructureConstantRing(ScRingSpec spec, CoeffSpace space);

    ScRingSpec                _spec;
    CoeffSpace                _space;
    RingElement               _one;
    std::vector<SparseVector> _mult;
  };

  ////////////////////////////////////////////////////////////////////////
  // Witness-tracked closures
  ////////////////////////////////////////////////////////////////////////

  struct ClosureActions {
    bool left_r  = false;  // left multiplication by S_e
    bool right_r = false;  // right multiplication by S_e

    static constexpr ClosureActions none() { return {}; }
    static constexpr ClosureActions both() { return {true, true}; }
  };

  // One spanning element left * generators[generator] * right.
  struct SpanTerm {
    RingElement left;
    std::size_t generator;
    RingElement right;
    RingElement value;
  };

  struct WitnessTerm {
    Scalar      scalar;
    RingElement left;
    std::size_t generator;
    RingElement right;
  };

  // The smallest additive subgroup containing the generators that is closed
  // under coefficient scaling and the requested multiplications by S_e. Every
  // member is a recorded combination sum c * left * gen * right.
  class WitnessedModule {
   public:
    std::vector<RingElement> const& generators() const noexcept {
      return _generators;
    }
    std::vector<SpanTerm> const& terms() const noexcept { return _terms; }
    std::vector<RingElement> const& members() const noexcept {
      return _span.members();
    }
    std::size_t size() const noexcept { return _span.size(); }
    bool contains(RingElement const& x) const { return _span.contains(x); }

    std::vector<WitnessTerm> witness(RingElement const& member) const;
    RingElement evaluate(StructureConstantRing const&    ring,
                         std::vector<WitnessTerm> const& witness) const;

    // The two-sided identity of the member set, when it has one. Checked
    // against the spanning terms, which suffices by bilinearity.
    std::optional<RingElement> identity(StructureConstantRing const& ring) const;

    SpanEnumeration<RingElement> const& enumeration() const noexcept {
      return _span;
    }

   private:
    friend WitnessedModule module_closure(StructureConstantRing const&,
                                          std::span<RingElement const>,
                                          ClosureActions,
                                          std::size_t);

    std::vector<RingElement>     _generators;
    std::vector<SpanTerm>        _terms;
    SpanEnumeration<RingElement> _span;
  };

  WitnessedModule module_closure(StructureConstantRing const& ring,
                                 std::span<RingElement const> gens,
                                 ClosureActions               actions,
                                 std::size_t cap = kDefaultClosureCap);

  bool module_equal(WitnessedModule const& a, WitnessedModule const& b);

  // Additive span (coefficient span) of the elements.
  WitnessedModule span_of(StructureConstantRing const& ring,
                          std::span<RingElement const> elements,
                          std::size_t                  cap = kDefaultClosureCap);

  // Span of all products x*y with x in S_g, y in S_h.
  WitnessedModule component_product(StructureConstantRing const& ring,
                                    GroupElement g, GroupElement h,
                                    std::size_t cap = kDefaultClosureCap);

}  // namespace grady
