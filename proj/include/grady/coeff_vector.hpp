#pragma once

// Coefficient vectors over a CoeffRing where each coordinate may carry
// torsion: coordinate i lives in the cyclic module CoeffRing / ann_i, so its
// scalar is kept reduced modulo a per-component order.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grady/coeff.hpp"

namespace grady {

  class CoeffVector {
   public:
    CoeffVector() = default;
    explicit CoeffVector(std::size_t n) : _c(n) {}

    std::size_t size() const noexcept { return _c.size(); }
    Scalar      operator[](std::size_t i) const { return _c[i]; }
    Scalar&     operator[](std::size_t i) { return _c[i]; }

    bool is_zero() const noexcept {
      for (auto s : _c) {
        if (s.code != 0) {
          return false;
        }
      }
      return true;
    }

    std::vector<Scalar> const& coefficients() const noexcept { return _c; }

    auto operator<=>(CoeffVector const&) const = default;

   private:
    std::vector<Scalar> _c;
  };

  using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

  class CoeffSpace {
   public:
    using Element = CoeffVector;

    CoeffSpace(CoeffRing coeff, std::vector<std::vector<std::uint32_t>> orders);
    // Free module of rank n.
    CoeffSpace(CoeffRing coeff, std::size_t n);

    CoeffRing const& coeff() const noexcept { return _coeff; }
    std::size_t      dimension() const noexcept { return _orders.size(); }
    std::vector<std::uint32_t> const& order(std::size_t i) const {
      return _orders[i];
    }
    // |CoeffRing / ann_i|.
    std::uint64_t coordinate_size(std::size_t i) const;

    CoeffVector zero() const { return CoeffVector(dimension()); }
    CoeffVector unit(std::size_t i) const;
    CoeffVector from_sparse(SparseVector const& sv) const;
    SparseVector to_sparse(CoeffVector const& v) const;

    Scalar canonical(std::size_t i, Scalar s) const {
      return _coeff.reduce(s, _orders[i]);
    }

    CoeffVector add(CoeffVector const& a, CoeffVector const& b) const;
    CoeffVector sub(CoeffVector const& a, CoeffVector const& b) const;
    CoeffVector neg(CoeffVector const& a) const;
    CoeffVector scale(Scalar c, CoeffVector const& a) const;

    // Adds c * v into acc, coordinate by coordinate.
    void axpy(CoeffVector& acc, Scalar c, SparseVector const& v) const;

    std::string render(CoeffVector const&              v,
                       std::vector<std::string> const& names) const;

   private:
    CoeffRing                               _coeff;
    std::vector<std::vector<std::uint32_t>> _orders;
  };

}  // namespace grady
