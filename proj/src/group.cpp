#include "grady/group.hpp"

#include <sstream>
#include <stdexcept>

namespace grady {

  FiniteGroup::FiniteGroup(std::vector<std::vector<GroupElement>> table,
                           std::vector<std::string>               names)
      : _table(std::move(table)), _names(std::move(names)) {
    auto const n = _table.size();
    if (n == 0) {
      throw std::invalid_argument("group table is empty");
    }
    for (auto const& row : _table) {
      if (row.size() != n) {
        throw std::invalid_argument("group table is not square");
      }
      for (auto x : row) {
        if (x >= n) {
          throw std::invalid_argument("group table entry out of range");
        }
      }
    }
    bool found = false;
    for (GroupElement e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (GroupElement a = 0; a < n && ok; ++a) {
        ok = _table[e][a] == a && _table[a][e] == a;
      }
      if (ok) {
        _identity = e;
        found     = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("group table has no identity");
    }
    _inv.assign(n, 0);
    for (GroupElement a = 0; a < n; ++a) {
      bool has = false;
      for (GroupElement b = 0; b < n && !has; ++b) {
        if (_table[a][b] == _identity && _table[b][a] == _identity) {
          _inv[a] = b;
          has     = true;
        }
      }
      if (!has) {
        throw std::invalid_argument("element " + std::to_string(a)
                                    + " has no inverse");
      }
    }
    for (GroupElement a = 0; a < n; ++a) {
      for (GroupElement b = 0; b < n; ++b) {
        for (GroupElement c = 0; c < n; ++c) {
          if (_table[_table[a][b]][c] != _table[a][_table[b][c]]) {
            throw std::invalid_argument(
                "group table not associative at (" + std::to_string(a) + ","
                + std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
    if (_names.empty()) {
      for (GroupElement a = 0; a < n; ++a) {
        _names.push_back(std::to_string(a));
      }
    } else if (_names.size() != n) {
      throw std::invalid_argument("group element names have wrong length");
    }
  }

  ElementSet FiniteGroup::all() const {
    ElementSet out;
    for (GroupElement a = 0; a < order(); ++a) {
      out.insert(a);
    }
    return out;
  }

  FiniteGroup cyclic_group(std::uint32_t n) {
    if (n == 0) {
      throw std::invalid_argument("cyclic group order must be positive");
    }
    std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
    for (GroupElement a = 0; a < n; ++a) {
      for (GroupElement b = 0; b < n; ++b) {
        table[a][b] = (a + b) % n;
      }
    }
    FiniteGroup g(std::move(table));
    g._cyclic = n;
    return g;
  }

  ElementSet subgroup_closure(FiniteGroup const& group, ElementSet const& gens) {
    ElementSet                out{group.identity()};
    std::vector<GroupElement> frontier{group.identity()};
    for (auto g : gens) {
      if (out.insert(g).second) {
        frontier.push_back(g);
      }
    }
    // In a finite group closing under products also closes under inverses.
    while (!frontier.empty()) {
      auto a = frontier.back();
      frontier.pop_back();
      for (auto g : gens) {
        for (auto c : {group.op(a, g), group.op(g, a)}) {
          if (out.insert(c).second) {
            frontier.push_back(c);
          }
        }
      }
    }
    return out;
  }

  bool is_subgroup(FiniteGroup const& group, ElementSet const& subset) {
    if (!subset.contains(group.identity())) {
      return false;
    }
    for (auto a : subset) {
      if (!subset.contains(group.inv(a))) {
        return false;
      }
      for (auto b : subset) {
        if (!subset.contains(group.op(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  std::string to_string(FiniteGroup const& group, ElementSet const& subset) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto a : subset) {
      os << (first ? "" : ",") << group.name(a);
      first = false;
    }
    os << '}';
    return os.str();
  }

}  // namespace grady
