#pragma once

// Built-in structure-constant rings.

#include <array>
#include <cstdint>
#include <span>

#include "grady/coeff.hpp"
#include "grady/group.hpp"
#include "grady/sc_ring.hpp"

namespace grady {

  // The coefficient ring itself, concentrated in degree e.
  StructureConstantRing trivial_fixture(CoeffRing const& coeff, FiniteGroup const& group);

  // coeff[G] with basis {u_g} and u_g u_h = u_{gh}.
  StructureConstantRing group_ring_fixture(CoeffRing const& coeff, FiniteGroup const& group);

  // Z/2-graded 3x3 matrices with entries in A = coeff except the positions
  // (1,3), (2,3), (3,1), (3,2), whose entries lie in the ideal B generated by
  // `ideal_gens`. Those four positions form the degree-1 component. B must
  // have an identity different from 1. With coeff = Z/6 and B = (2) this is
  // the DADE6 ring.
  StructureConstantRing triangular_matrix_fixture(CoeffRing const&        coeff,
                                                  std::span<Scalar const> ideal_gens);

  // 0-based matrix positions carrying ideal entries.
  bool is_ideal_position(std::size_t row, std::size_t col);

  using Matrix3 = std::array<std::array<std::int64_t, 3>, 3>;

  // A triangular matrix ring together with the data needed to move between
  // ring elements and matrices. Ideal positions use the basis element
  // generator * E_rc. Matrix entries are integers (single-modulus
  // coefficient rings).
  struct MatrixFixture {
    StructureConstantRing ring;
    Scalar                generator;  // single generator of B
    Scalar                unit;       // identity of B

    RingElement element(Matrix3 const& entries) const;
    Matrix3     entries(RingElement const& a) const;
  };

  MatrixFixture triangular_matrix(CoeffRing const& coeff, std::span<Scalar const> ideal_gens);
  MatrixFixture dade6();

  // coeff[x]/(x^2) graded by Z/2 with x in degree 1: S_1 S_1 = 0 while
  // S_1 != 0, so the grading is not symmetric.
  StructureConstantRing nilpotent_fixture(CoeffRing const& coeff);

}  // namespace grady
