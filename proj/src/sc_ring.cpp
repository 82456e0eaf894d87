#include "grady/sc_ring.hpp"

#include <set>
#include <sstream>

#include "grady/errors.hpp"

namespace grady {

  namespace {
    std::string indices_text(std::vector<std::size_t> const& idx) {
      std::ostringstream os;
      os << '(';
      for (std::size_t k = 0; k < idx.size(); ++k) {
        os << (k ? "," : "") << idx[k];
      }
      os << ')';
      return os.str();
    }

    [[noreturn]] void fail(ValidationError::Kind    kind,
                           std::vector<std::size_t> idx,
                           std::string const&       msg) {
      auto text = std::string(to_string(kind)) + indices_text(idx) + ": " + msg;
      throw ValidationError(kind, std::move(idx), text);
    }

    // The generator of the annihilator of a basis element with the given
    // torsion orders.
    Scalar annihilator(CoeffRing const& coeff, std::vector<std::uint32_t> const& o) {
      std::vector<std::int64_t> r(o.begin(), o.end());
      return coeff.from_residues(r);
    }
  }  // namespace

  StructureConstantRing::StructureConstantRing(ScRingSpec spec, CoeffSpace space)
      : _spec(std::move(spec)), _space(std::move(space)) {}

  StructureConstantRing StructureConstantRing::build(ScRingSpec spec) {
    using K      = ValidationError::Kind;
    auto const n = spec.degrees.size();
    if (n == 0) {
      fail(K::Malformed, {}, "ring needs at least one basis element");
    }
    if (spec.basis_names.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        spec.basis_names.push_back("b" + std::to_string(i));
      }
    }
    if (spec.basis_names.size() != n) {
      fail(K::Malformed, {}, "basis names and degrees differ in length");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (spec.degrees[i] >= spec.group.order()) {
        fail(K::Malformed, {i}, "degree is not a group element");
      }
    }
    if (spec.torsion.empty()) {
      spec.torsion.assign(n, spec.coeff.moduli());
    }
    if (spec.torsion.size() != n) {
      fail(K::Malformed, {}, "torsion list has wrong length");
    }
    std::optional<CoeffSpace> space_opt;
    try {
      space_opt.emplace(spec.coeff, spec.torsion);
    } catch (std::invalid_argument const& e) {
      fail(K::Malformed, {}, e.what());
    }
    StructureConstantRing ring(std::move(spec), std::move(*space_opt));
    auto const&           S = ring._spec;
    auto const&           V = ring._space;

    ring._mult.assign(n * n, {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto const& entry : S.table) {
      if (entry.i >= n || entry.j >= n) {
        fail(K::Malformed, {entry.i, entry.j}, "table index out of range");
      }
      if (!seen.emplace(entry.i, entry.j).second) {
        fail(K::Malformed, {entry.i, entry.j}, "duplicate table entry");
      }
      for (auto const& [k, c] : entry.value) {
        if (k >= n) {
          fail(K::Malformed, {entry.i, entry.j}, "product index out of range");
        }
      }
      ring._mult[entry.i * n + entry.j] = V.to_sparse(V.from_sparse(entry.value));
    }

    // Homogeneity.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const d = S.group.op(S.degrees[i], S.degrees[j]);
        for (auto const& [k, c] : ring._mult[i * n + j]) {
          if (S.degrees[k] != d) {
            fail(K::Homogeneity, {i, j},
                 "product has a term of degree " + S.group.name(S.degrees[k])
                     + ", expected " + S.group.name(d));
          }
        }
      }
    }

    // Products must respect the torsion of their factors.
    for (std::size_t i = 0; i < n; ++i) {
      auto const c = annihilator(S.coeff, S.torsion[i]);
      for (std::size_t j = 0; j < n; ++j) {
        for (auto const& prod : {ring._mult[i * n + j], ring._mult[j * n + i]}) {
          auto acc = V.zero();
          V.axpy(acc, c, prod);
          if (!acc.is_zero()) {
            fail(K::Torsion, {i, j},
                 "product does not vanish under the annihilator of "
                     + S.basis_names[i]);
          }
        }
      }
    }

    // Identity.
    ring._one = V.from_sparse(S.one);
    for (std::size_t k = 0; k < n; ++k) {
      if (ring._one[k].code != 0 && S.degrees[k] != S.group.identity()) {
        fail(K::Identity, {k}, "identity has a component outside degree e");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto b = ring.basis(i);
      if (ring.multiply(ring._one, b) != b || ring.multiply(b, ring._one) != b) {
        fail(K::Identity, {i}, "identity does not fix " + S.basis_names[i]);
      }
    }

    // Associativity on basis triples.
    std::vector<RingElement> basis;
    for (std::size_t i = 0; i < n; ++i) {
      basis.push_back(ring.basis(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto ij = ring.multiply(basis[i], basis[j]);
        for (std::size_t k = 0; k < n; ++k) {
          auto lhs = ring.multiply(ij, basis[k]);
          auto rhs = ring.multiply(basis[i], ring.multiply(basis[j], basis[k]));
          if (lhs != rhs) {
            fail(K::Associativity, {i, j, k}, "(b_i b_j) b_k != b_i (b_j b_k)");
          }
        }
      }
    }
    return ring;
  }

  RingElement StructureConstantRing::multiply(RingElement const& a,
                                              RingElement const& b) const {
    auto const  n   = basis_size();
    auto const& R   = coeff();
    auto        out = zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].code == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].code == 0) {
          continue;
        }
        auto const& prod = _mult[i * n + j];
        if (!prod.empty()) {
          _space.axpy(out, R.mul(a[i], b[j]), prod);
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> StructureConstantRing::component_basis(GroupElement g) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_size(); ++i) {
      if (_spec.degrees[i] == g) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<RingElement> StructureConstantRing::component_elements(GroupElement g) const {
    std::vector<RingElement> out;
    for (auto i : component_basis(g)) {
      out.push_back(basis(i));
    }
    return out;
  }

  RingElement StructureConstantRing::homogeneous_part(RingElement const& a,
                                                      GroupElement       g) const {
    auto out = zero();
    for (std::size_t i = 0; i < basis_size(); ++i) {
      if (_spec.degrees[i] == g) {
        out[i] = a[i];
      }
    }
    return out;
  }

  bool StructureConstantRing::is_homogeneous(RingElement const& a,
                                             GroupElement       g) const {
    for (std::size_t i = 0; i < basis_size(); ++i) {
      if (a[i].code != 0 && _spec.degrees[i] != g) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t StructureConstantRing::cardinality() const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < basis_size(); ++i) {
      n *= _space.coordinate_size(i);
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // WitnessedModule
  ////////////////////////////////////////////////////////////////////////

  WitnessedModule module_closure(StructureConstantRing const& ring,
                                 std::span<RingElement const> gens,
                                 ClosureActions               actions,
                                 std::size_t                  cap) {
    WitnessedModule out;
    out._generators.assign(gens.begin(), gens.end());
    auto const one = ring.one();
    auto const R   = ring.component_elements(ring.group().identity());

    auto push = [&](RingElement const& l, std::size_t k, RingElement const& r) {
      auto v = ring.multiply(ring.multiply(l, out._generators[k]), r);
      out._terms.push_back(SpanTerm{l, k, r, std::move(v)});
    };
    for (std::size_t k = 0; k < gens.size(); ++k) {
      push(one, k, one);
    }
    if (actions.left_r) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        for (auto const& l : R) {
          push(l, k, one);
        }
      }
    }
    if (actions.right_r) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        for (auto const& r : R) {
          push(one, k, r);
        }
      }
    }
    if (actions.left_r && actions.right_r) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        for (auto const& l : R) {
          for (auto const& r : R) {
            push(l, k, r);
          }
        }
      }
    }
    std::vector<RingElement> values;
    values.reserve(out._terms.size());
    for (auto const& t : out._terms) {
      values.push_back(t.value);
    }
    out._span = SpanEnumeration<RingElement>::enumerate(
        ring.space(), std::span<RingElement const>(values), cap);
    return out;
  }

  std::vector<WitnessTerm> WitnessedModule::witness(RingElement const& member) const {
    auto idx = _span.index_of(member);
    if (!idx) {
      throw std::invalid_argument("element is not a member of the closure");
    }
    std::vector<WitnessTerm> out;
    for (auto const& [t, c] : _span.combination(*idx)) {
      auto const& term = _terms[t];
      out.push_back(WitnessTerm{c, term.left, term.generator, term.right});
    }
    return out;
  }

  RingElement WitnessedModule::evaluate(StructureConstantRing const&    ring,
                                        std::vector<WitnessTerm> const& witness) const {
    auto acc = ring.zero();
    for (auto const& w : witness) {
      auto v = ring.multiply(ring.multiply(w.left, _generators[w.generator]), w.right);
      acc    = ring.add(acc, ring.scale(w.scalar, v));
    }
    return acc;
  }

  std::optional<RingElement> WitnessedModule::identity(
      StructureConstantRing const& ring) const {
    std::set<RingElement> values;
    for (auto const& t : _terms) {
      if (!t.value.is_zero()) {
        values.insert(t.value);
      }
    }
    auto is_identity = [&](RingElement const& u) {
      if (ring.multiply(u, u) != u) {
        return false;
      }
      for (auto const& t : values) {
        if (ring.multiply(u, t) != t || ring.multiply(t, u) != t) {
          return false;
        }
      }
      return true;
    };
    if (contains(ring.one()) && is_identity(ring.one())) {
      return ring.one();
    }
    for (auto const& u : members()) {
      if (is_identity(u)) {
        return u;
      }
    }
    return std::nullopt;
  }

  bool module_equal(WitnessedModule const& a, WitnessedModule const& b) {
    return a.enumeration().same_members(b.enumeration());
  }

  WitnessedModule span_of(StructureConstantRing const& ring,
                          std::span<RingElement const> elements,
                          std::size_t                  cap) {
    return module_closure(ring, elements, ClosureActions::none(), cap);
  }

  WitnessedModule component_product(StructureConstantRing const& ring,
                                    GroupElement g, GroupElement h,
                                    std::size_t cap) {
    std::vector<RingElement> products;
    for (auto i : ring.component_basis(g)) {
      for (auto j : ring.component_basis(h)) {
        products.push_back(ring.multiply(ring.basis(i), ring.basis(j)));
      }
    }
    return span_of(ring, products, cap);
  }

}  // namespace grady
