#pragma once

// Finite groups given by their composition table.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace grady {

  // Group elements are dense indices 0..order-1.
  using GroupElement = std::uint32_t;
  using ElementSet   = std::set<GroupElement>;

  class FiniteGroup {
   public:
    // Validates closure, associativity (on all triples), the identity and
    // inverses. Throws std::invalid_argument naming the offending entry.
    explicit FiniteGroup(std::vector<std::vector<GroupElement>> table,
                         std::vector<std::string>               names = {});

    std::size_t  order() const noexcept { return _table.size(); }
    GroupElement identity() const noexcept { return _identity; }

    GroupElement op(GroupElement a, GroupElement b) const {
      return _table[a][b];
    }
    GroupElement inv(GroupElement a) const { return _inv[a]; }

    std::string const& name(GroupElement a) const { return _names[a]; }
    std::vector<std::vector<GroupElement>> const& table() const noexcept {
      return _table;
    }
    // Set when built by cyclic_group; 0 otherwise.
    std::uint32_t cyclic_order() const noexcept { return _cyclic; }

    ElementSet all() const;

    bool operator==(FiniteGroup const& other) const noexcept {
      return _table == other._table;
    }

   private:
    friend FiniteGroup cyclic_group(std::uint32_t n);

    std::vector<std::vector<GroupElement>> _table;
    std::vector<GroupElement>              _inv;
    std::vector<std::string>               _names;
    GroupElement                           _identity = 0;
    std::uint32_t                          _cyclic   = 0;
  };

  // Z/n under addition; element i is the residue i.
  FiniteGroup cyclic_group(std::uint32_t n);

  ElementSet subgroup_closure(FiniteGroup const& group, ElementSet const& gens);
  bool       is_subgroup(FiniteGroup const& group, ElementSet const& subset);

  std::string to_string(FiniteGroup const& group, ElementSet const& subset);

}  // namespace grady
