#include "grady/sc_fixtures.hpp"

#include <stdexcept>

namespace grady {

  StructureConstantRing trivial_fixture(CoeffRing const& coeff, FiniteGroup const& group) {
    ScRingSpec spec{coeff, group, {"1"}, {group.identity()}, {}, {}, {}};
    spec.one   = {{0, coeff.one()}};
    spec.table = {{0, 0, {{0, coeff.one()}}}};
    return StructureConstantRing::build(std::move(spec));
  }

  StructureConstantRing group_ring_fixture(CoeffRing const& coeff, FiniteGroup const& group) {
    ScRingSpec spec{coeff, group, {}, {}, {}, {}, {}};
    for (GroupElement g = 0; g < group.order(); ++g) {
      spec.basis_names.push_back("u" + group.name(g));
      spec.degrees.push_back(g);
      for (GroupElement h = 0; h < group.order(); ++h) {
        spec.table.push_back({g, h, {{group.op(g, h), coeff.one()}}});
      }
    }
    spec.one = {{group.identity(), coeff.one()}};
    return StructureConstantRing::build(std::move(spec));
  }

  bool is_ideal_position(std::size_t row, std::size_t col) {
    return (row == 2) != (col == 2);
  }

  namespace {
    std::size_t position(std::size_t r, std::size_t c) {
      return 3 * r + c;
    }

    // kappa with kappa * u == x, if any.
    std::optional<Scalar> divide(CoeffRing const& coeff, Scalar x, Scalar u) {
      for (auto k : coeff.elements()) {
        if (coeff.mul(k, u) == x) {
          return k;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  MatrixFixture triangular_matrix(CoeffRing const& coeff, std::span<Scalar const> ideal_gens) {
    auto const ideal = Ideal::generated_by(coeff, ideal_gens);
    auto const unit  = ideal_identity(ideal);
    if (!unit) {
      throw std::invalid_argument("ideal has no identity element");
    }
    if (*unit == coeff.one()) {
      throw std::invalid_argument("ideal identity coincides with 1");
    }
    auto const u      = ideal.principal_generator();
    auto const orders = coeff.additive_orders(u);

    auto scale_of = [&](std::size_t r, std::size_t c) {
      return is_ideal_position(r, c) ? u : coeff.one();
    };

    ScRingSpec spec{coeff, cyclic_group(2), {}, {}, {}, {}, {}};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        auto name = "E" + std::to_string(r + 1) + std::to_string(c + 1);
        if (is_ideal_position(r, c)) {
          name += "(" + coeff.to_string(u) + ")";
          spec.torsion.push_back(orders);
          spec.degrees.push_back(1);
        } else {
          spec.torsion.push_back(coeff.moduli());
          spec.degrees.push_back(0);
        }
        spec.basis_names.push_back(std::move(name));
      }
    }
    // (s E_rc)(t E_cd) = st E_rd, rewritten over the basis element at (r,d).
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t d = 0; d < 3; ++d) {
          auto const st    = coeff.mul(scale_of(r, c), scale_of(c, d));
          auto const kappa = divide(coeff, st, scale_of(r, d));
          if (!kappa) {
            throw std::logic_error("matrix product leaves the ideal pattern");
          }
          spec.table.push_back({position(r, c), position(c, d), {{position(r, d), *kappa}}});
        }
      }
    }
    spec.one = {{position(0, 0), coeff.one()},
                {position(1, 1), coeff.one()},
                {position(2, 2), coeff.one()}};
    return MatrixFixture{StructureConstantRing::build(std::move(spec)), u, *unit};
  }

  StructureConstantRing triangular_matrix_fixture(CoeffRing const&        coeff,
                                                  std::span<Scalar const> ideal_gens) {
    return triangular_matrix(coeff, ideal_gens).ring;
  }

  MatrixFixture dade6() {
    CoeffRing  z6({6});
    Scalar     two = z6.from_integer(2);
    return triangular_matrix(z6, std::span<Scalar const>(&two, 1));
  }

  RingElement MatrixFixture::element(Matrix3 const& entries) const {
    auto const& coeff = ring.coeff();
    auto        out   = ring.zero();
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        auto x = coeff.from_integer(entries[r][c]);
        if (is_ideal_position(r, c)) {
          auto k = divide(coeff, x, generator);
          if (!k) {
            throw std::invalid_argument("entry is not in the ideal");
          }
          out[position(r, c)] = ring.space().canonical(position(r, c), *k);
        } else {
          out[position(r, c)] = x;
        }
      }
    }
    return out;
  }

  Matrix3 MatrixFixture::entries(RingElement const& a) const {
    auto const& coeff = ring.coeff();
    Matrix3     out{};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        auto x = a[position(r, c)];
        if (is_ideal_position(r, c)) {
          x = coeff.mul(x, generator);
        }
        out[r][c] = coeff.residues(x)[0];
      }
    }
    return out;
  }

  StructureConstantRing nilpotent_fixture(CoeffRing const& coeff) {
    ScRingSpec spec{coeff, cyclic_group(2), {"1", "x"}, {0, 1}, {}, {}, {}};
    spec.one   = {{0, coeff.one()}};
    spec.table = {{0, 0, {{0, coeff.one()}}},
                  {0, 1, {{1, coeff.one()}}},
                  {1, 0, {{1, coeff.one()}}}};
    return StructureConstantRing::build(std::move(spec));
  }

}  // namespace grady
