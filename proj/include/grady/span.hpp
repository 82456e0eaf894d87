#pragma once

// Exhaustive enumeration of the coefficient span of a finite spanning list,
// recording for every member how it was reached.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grady/coeff.hpp"
#include "grady/errors.hpp"

namespace grady {

  constexpr std::size_t kDefaultClosureCap = 2'000'000;

  template <typename S>
  concept LinearSpace = requires(S const& s, typename S::Element const& x,
                                 Scalar c) {
    { s.coeff() } -> std::convertible_to<CoeffRing const&>;
    { s.zero() } -> std::same_as<typename S::Element>;
    { s.add(x, x) } -> std::same_as<typename S::Element>;
    { s.scale(c, x) } -> std::same_as<typename S::Element>;
  };

  template <typename Element>
  class SpanEnumeration {
   public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    // members[i] = members[parent] + scalar * spanning[term].
    struct Step {
      std::size_t parent;
      std::size_t term;
      Scalar      scalar;
    };

    template <LinearSpace Space>
    static SpanEnumeration enumerate(Space const&             space,
                                     std::span<Element const> spanning,
                                     std::size_t cap = kDefaultClosureCap) {
      SpanEnumeration out;
      out.insert(space.zero(), Step{npos, npos, Scalar{}});
      auto const scalars = space.coeff().elements();
      for (std::size_t k = 0; k < spanning.size(); ++k) {
        if (out.contains(spanning[k])) {
          continue;
        }
        auto const n = out._members.size();
        for (auto c : scalars) {
          if (c.code == 0) {
            continue;
          }
          auto ct = space.scale(c, spanning[k]);
          for (std::size_t i = 0; i < n; ++i) {
            auto x = space.add(out._members[i], ct);
            if (!out.contains(x)) {
              if (out._members.size() >= cap) {
                throw CapExceeded(cap);
              }
              out.insert(std::move(x), Step{i, k, c});
            }
          }
        }
      }
      return out;
    }

    std::size_t                 size() const noexcept { return _members.size(); }
    std::vector<Element> const& members() const noexcept { return _members; }

    bool contains(Element const& x) const { return _index.contains(x); }

    std::optional<std::size_t> index_of(Element const& x) const {
      auto it = _index.find(x);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    // The member as a combination of spanning terms, sorted by term index.
    // Each term appears at most once along a chain.
    std::vector<std::pair<std::size_t, Scalar>> combination(std::size_t i) const {
      std::vector<std::pair<std::size_t, Scalar>> out;
      while (_steps[i].parent != npos) {
        out.emplace_back(_steps[i].term, _steps[i].scalar);
        i = _steps[i].parent;
      }
      std::reverse(out.begin(), out.end());
      return out;
    }

    bool same_members(SpanEnumeration const& other) const {
      if (size() != other.size()) {
        return false;
      }
      return std::all_of(_members.begin(), _members.end(), [&](auto const& x) {
        return other.contains(x);
      });
    }

    bool subset_of(SpanEnumeration const& other) const {
      return std::all_of(_members.begin(), _members.end(), [&](auto const& x) {
        return other.contains(x);
      });
    }

   private:
    void insert(Element x, Step step) {
      _index.emplace(x, _members.size());
      _members.push_back(std::move(x));
      _steps.push_back(step);
    }

    std::vector<Element>               _members;
    std::vector<Step>                  _steps;
    std::map<Element, std::size_t>     _index;
  };

}  // namespace grady
