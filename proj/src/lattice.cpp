#include "grady/lattice.hpp"

#include <algorithm>

namespace grady {

  namespace {
    template <typename E>
    void add_unique(std::vector<E>& out, E const& x) {
      if (std::find(out.begin(), out.end(), x) == out.end()) {
        out.push_back(x);
      }
    }
  }  // namespace

  std::vector<RingElement> central_candidates(ScBackend const& S, BooleanSemigroup<RingElement> const& sg,
                                              std::size_t cap) {
    auto const&              ring = S.ring();
    auto const               gens = ring.component_elements(ring.group().identity());
    std::vector<RingElement> out;
    try {
      auto span = SpanEnumeration<RingElement>::enumerate(S.linear_space(), std::span<RingElement const>(gens), cap);
      for (auto const& x : span.members()) {
        if (S.mul(x, x) == x && commutes_with(S, x, gens)) {
          out.push_back(x);
        }
      }
    } catch (CapExceeded const&) {
      out.clear();
    }
    for (auto const& x : sg.elements) {
      add_unique(out, x);
    }
    return out;
  }

  std::vector<LpaElement> central_candidates(LpaBackend const& S, BooleanSemigroup<LpaElement> const& sg,
                                             std::size_t cap) {
    auto const& L = S.algebra();
    auto const  n = L.graph().vertex_count();
    auto const  r = S.component_generators(L.group().identity()).elements;
    std::vector<LpaElement> out;
    if (n < 63 && (std::size_t{1} << n) <= cap) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        auto x = L.zero();
        for (std::size_t v = 0; v < n; ++v) {
          if (mask >> v & 1) {
            x = L.add(x, L.vertex(v));
          }
        }
        if (commutes_with(S, x, r)) {
          out.push_back(std::move(x));
        }
      }
    }
    for (auto const& x : sg.elements) {
      add_unique(out, x);
    }
    return out;
  }

}  // namespace grady
