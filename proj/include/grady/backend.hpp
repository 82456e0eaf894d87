#pragma once

// Uniform views of the two ring representations, used by the analysis
// templates. Both expose homogeneous generators per degree, ring
// arithmetic and a linear space for span enumeration.

#include <cstddef>
#include <string>
#include <vector>

#include "grady/lpa.hpp"
#include "grady/sc_ring.hpp"
#include "grady/span.hpp"

namespace grady {

  struct Bounds {
    std::size_t max_len     = 0;  // 0 picks the backend default
    std::size_t max_depth   = 0;
    std::size_t closure_cap = kDefaultClosureCap;
    std::size_t pair_cap    = std::size_t{1} << 20;
  };

  template <typename E>
  struct GeneratorList {
    std::vector<E> elements;
    bool           complete;
  };

  class ScBackend {
   public:
    using Element                     = RingElement;
    static constexpr bool enumerable = true;

    explicit ScBackend(StructureConstantRing const& ring, Bounds bounds = {})
        : _ring(ring), _bounds(bounds) {}

    StructureConstantRing const& ring() const noexcept { return _ring; }
    CoeffSpace const&            linear_space() const { return _ring.space(); }
    FiniteGroup const&           group() const noexcept { return _ring.group(); }
    CoeffRing const&             coeff() const noexcept { return _ring.coeff(); }
    Bounds const&                bounds() const noexcept { return _bounds; }

    Element one() const { return _ring.one(); }
    Element zero() const { return _ring.zero(); }
    Element add(Element const& a, Element const& b) const { return _ring.add(a, b); }
    Element sub(Element const& a, Element const& b) const { return _ring.sub(a, b); }
    Element neg(Element const& a) const { return _ring.neg(a); }
    Element scale(Scalar c, Element const& a) const { return _ring.scale(c, a); }
    Element mul(Element const& a, Element const& b) const { return _ring.multiply(a, b); }
    bool    is_zero(Element const& a) const { return a.is_zero(); }
    std::string render(Element const& a) const { return _ring.render(a); }

    GeneratorList<Element> component_generators(GroupElement g) const {
      return {_ring.component_elements(g), true};
    }

    std::vector<Element> algebra_generators() const {
      std::vector<Element> out;
      for (std::size_t i = 0; i < _ring.basis_size(); ++i) {
        out.push_back(_ring.basis(i));
      }
      return out;
    }

    ElementSet support() const {
      ElementSet out;
      for (std::size_t i = 0; i < _ring.basis_size(); ++i) {
        out.insert(_ring.degree(i));
      }
      return out;
    }

   private:
    StructureConstantRing const& _ring;
    Bounds                       _bounds;
  };

  class LpaBackend {
   public:
    using Element                     = LpaElement;
    static constexpr bool enumerable = false;

    explicit LpaBackend(LeavittAlgebra const& algebra, Bounds bounds = {})
        : _algebra(algebra), _bounds(bounds) {
      if (_bounds.max_len == 0) {
        _bounds.max_len = algebra.default_bound();
      }
      if (_bounds.max_depth == 0) {
        _bounds.max_depth = algebra.default_bound();
      }
    }

    LeavittAlgebra const& algebra() const noexcept { return _algebra; }
    LeavittAlgebra const& linear_space() const noexcept { return _algebra; }
    FiniteGroup const&    group() const noexcept { return _algebra.group(); }
    CoeffRing const&      coeff() const noexcept { return _algebra.coeff(); }
    Bounds const&         bounds() const noexcept { return _bounds; }

    Element one() const { return _algebra.one(); }
    Element zero() const { return _algebra.zero(); }
    Element add(Element const& a, Element const& b) const { return _algebra.add(a, b); }
    Element sub(Element const& a, Element const& b) const { return _algebra.sub(a, b); }
    Element neg(Element const& a) const { return _algebra.neg(a); }
    Element scale(Scalar c, Element const& a) const { return _algebra.scale(c, a); }
    Element mul(Element const& a, Element const& b) const { return _algebra.multiply(a, b); }
    bool    is_zero(Element const& a) const { return a.is_zero(); }
    std::string render(Element const& a) const { return _algebra.render(a); }

    GeneratorList<Element> component_generators(GroupElement g) const {
      return component_generators(g, _bounds.max_len);
    }

    GeneratorList<Element> component_generators(GroupElement g, std::size_t len) const {
      auto                 list = _algebra.monomials_of_degree(g, len, _bounds.closure_cap);
      std::vector<Element> out;
      out.reserve(list.monomials.size());
      for (auto const& m : list.monomials) {
        out.push_back(_algebra.monomial(m));
      }
      return {std::move(out), list.complete};
    }

    // vertices, edges and ghost edges
    std::vector<Element> algebra_generators() const {
      std::vector<Element> out;
      auto const&          G = _algebra.graph();
      for (std::size_t v = 0; v < G.vertex_count(); ++v) {
        out.push_back(_algebra.vertex(v));
      }
      for (std::size_t e = 0; e < G.edge_count(); ++e) {
        out.push_back(_algebra.edge(e));
        out.push_back(_algebra.ghost(e));
      }
      return out;
    }

    ElementSet support() const {
      ElementSet out;
      for (GroupElement g = 0; g < group().order(); ++g) {
        if (!_algebra.component_support(g).empty()) {
          out.insert(g);
        }
      }
      return out;
    }

   private:
    LeavittAlgebra const& _algebra;
    Bounds                _bounds;
  };

}  // namespace grady
