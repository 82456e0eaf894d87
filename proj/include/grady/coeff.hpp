#pragma once

// Finite commutative coefficient rings Z/m1 x ... x Z/mk.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grady {

  // An element of a CoeffRing, stored as its mixed-radix code (component 0
  // is the least significant digit). Only meaningful together with the ring
  // that produced it.
  struct Scalar {
    std::uint64_t code = 0;
    auto operator<=>(Scalar const&) const = default;
  };

  class CoeffRing {
   public:
    // Every modulus must be >= 2 and the product must stay below 2^32.
    explicit CoeffRing(std::vector<std::uint32_t> moduli);

    std::vector<std::uint32_t> const& moduli() const noexcept {
      return _moduli;
    }
    std::size_t   components() const noexcept { return _moduli.size(); }
    std::uint64_t size() const noexcept { return _size; }

    Scalar zero() const noexcept { return Scalar{0}; }
    Scalar one() const noexcept { return _one; }

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;

    bool is_zero(Scalar a) const noexcept { return a.code == 0; }
    bool is_unit(Scalar a) const;

    // Residues are reduced into range; the span length must match
    // components().
    Scalar from_residues(std::span<std::int64_t const> residues) const;
    Scalar from_integer(std::int64_t n) const;
    std::vector<std::uint32_t> residues(Scalar a) const;

    // Reduces component k modulo orders[k] (each orders[k] divides
    // moduli()[k]).
    Scalar reduce(Scalar a, std::span<std::uint32_t const> orders) const;

    // Additive order of `a` in each component: m_k / gcd(a_k, m_k).
    std::vector<std::uint32_t> additive_orders(Scalar a) const;

    // All elements in code order.
    std::vector<Scalar> elements() const;

    std::string to_string(Scalar a) const;

    bool operator==(CoeffRing const& other) const noexcept {
      return _moduli == other._moduli;
    }

   private:
    std::vector<std::uint32_t> _moduli;
    std::vector<std::uint64_t> _radix;
    std::uint64_t              _size;
    Scalar                     _one;
  };

  // An ideal stored by its explicit member list (sorted by code).
  class Ideal {
   public:
    static Ideal generated_by(CoeffRing const& ambient,
                              std::span<Scalar const> generators);

    CoeffRing const&           ambient() const noexcept { return _ambient; }
    std::vector<Scalar> const& members() const noexcept { return _members; }
    bool                       contains(Scalar a) const;

    // Some single element generating the whole ideal (every ideal of a
    // product of cyclic rings is principal).
    Scalar principal_generator() const;

   private:
    Ideal(CoeffRing ambient, std::vector<Scalar> members)
        : _ambient(std::move(ambient)), _members(std::move(members)) {}

    CoeffRing           _ambient;
    std::vector<Scalar> _members;
  };

  // The element u of I with u*x = x for every x in I, when it exists.
  std::optional<Scalar> ideal_identity(Ideal const& ideal);

}  // namespace grady
