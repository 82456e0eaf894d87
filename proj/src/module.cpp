#include "grady/module.hpp"

#include <set>
#include <sstream>

namespace grady {

  namespace {
    [[noreturn]] void fail(ValidationError::Kind kind, std::vector<std::size_t> idx, std::string const& msg) {
      std::ostringstream os;
      os << to_string(kind) << '(';
      for (std::size_t k = 0; k < idx.size(); ++k) {
        os << (k ? "," : "") << idx[k];
      }
      os << "): " << msg;
      throw ValidationError(kind, std::move(idx), os.str());
    }

    std::optional<Scalar> divide(CoeffRing const& R, Scalar x, Scalar by) {
      for (auto c : R.elements()) {
        if (R.mul(c, by) == x) {
          return c;
        }
      }
      return std::nullopt;
    }

    MemberSet span(GradedModule const& M, std::vector<ModuleElement> const& xs, std::size_t cap) {
      return MemberSet::enumerate(M.space(), std::span<ModuleElement const>(xs), cap);
    }

    std::vector<ModuleElement> times(GradedModule const& M, RingElement const& u, std::vector<ModuleElement> xs) {
      for (auto& x : xs) {
        x = M.act(u, x);
      }
      return xs;
    }

    std::vector<RingElement> times(StructureConstantRing const& R, RingElement const& u,
                                   std::vector<RingElement> xs) {
      for (auto& x : xs) {
        x = R.multiply(u, x);
      }
      return xs;
    }
  }  // namespace

  GradedModule GradedModule::build(StructureConstantRing ring, ModuleSpec spec) {
    using K      = ValidationError::Kind;
    auto const n = spec.degrees.size();
    if (spec.basis_names.empty()) {
      for (std::size_t k = 0; k < n; ++k) {
        spec.basis_names.push_back("m" + std::to_string(k));
      }
    }
    if (spec.basis_names.size() != n) {
      fail(K::Malformed, {}, "basis names and degrees differ in length");
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (spec.degrees[k] >= ring.group().order()) {
        fail(K::Malformed, {k}, "degree is not a group element");
      }
    }
    if (spec.torsion.empty()) {
      spec.torsion.assign(n, ring.coeff().moduli());
    }
    if (spec.torsion.size() != n) {
      fail(K::Malformed, {}, "torsion list has wrong length");
    }
    std::optional<CoeffSpace> space;
    try {
      space.emplace(ring.coeff(), spec.torsion);
    } catch (std::invalid_argument const& e) {
      fail(K::Malformed, {}, e.what());
    }

    auto const     r = ring.basis_size();
    GradedModule   M(std::move(ring), std::move(spec), std::move(*space));
    auto const&    S = M._ring;
    auto const&    V = M._space;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    M._act.assign(r * n, {});
    for (auto const& entry : M._spec.action) {
      if (entry.i >= r || entry.j >= n) {
        fail(K::Malformed, {entry.i, entry.j}, "action index out of range");
      }
      if (!seen.emplace(entry.i, entry.j).second) {
        fail(K::Malformed, {entry.i, entry.j}, "duplicate action entry");
      }
      for (auto const& [k, c] : entry.value) {
        if (k >= n) {
          fail(K::Malformed, {entry.i, entry.j}, "action value index out of range");
        }
      }
      M._act[entry.i * n + entry.j] = V.to_sparse(V.from_sparse(entry.value));
    }

    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const d = S.group().op(S.degree(i), M._spec.degrees[j]);
        for (auto const& [k, c] : M._act[i * n + j]) {
          if (M._spec.degrees[k] != d) {
            fail(K::Grading, {i, j}, "b_i m_j has a term outside degree " + S.group().name(d));
          }
        }
      }
    }

    // torsion of either factor must kill the product
    auto const& R = S.coeff();
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::int64_t> a(S.space().order(i).begin(), S.space().order(i).end());
        std::vector<std::int64_t> b(V.order(j).begin(), V.order(j).end());
        for (auto c : {R.from_residues(a), R.from_residues(b)}) {
          auto acc = V.zero();
          V.axpy(acc, c, M._act[i * n + j]);
          if (!acc.is_zero()) {
            fail(K::Torsion, {i, j}, "action does not respect torsion");
          }
        }
      }
    }

    for (std::size_t j = 0; j < n; ++j) {
      if (M.act(S.one(), M.basis(j)) != M.basis(j)) {
        fail(K::IdentityAction, {j}, "1 does not fix " + M._spec.basis_names[j]);
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        auto ij = S.multiply(S.basis(i), S.basis(j));
        for (std::size_t k = 0; k < n; ++k) {
          if (M.act(ij, M.basis(k)) != M.act(S.basis(i), M.act(S.basis(j), M.basis(k)))) {
            fail(K::ActionAssociativity, {i, j, k}, "(b_i b_j) m_k != b_i (b_j m_k)");
          }
        }
      }
    }
    return M;
  }

  ModuleElement GradedModule::act(RingElement const& a, ModuleElement const& m) const {
    auto const  n   = basis_size();
    auto const& R   = _ring.coeff();
    auto        out = zero();
    for (std::size_t i = 0; i < _ring.basis_size(); ++i) {
      if (a[i].code == 0) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (m[k].code != 0 && !_act[i * n + k].empty()) {
          _space.axpy(out, R.mul(a[i], m[k]), _act[i * n + k]);
        }
      }
    }
    return out;
  }

  std::vector<ModuleElement> GradedModule::component_elements(GroupElement h) const {
    std::vector<ModuleElement> out;
    for (std::size_t k = 0; k < basis_size(); ++k) {
      if (_spec.degrees[k] == h) {
        out.push_back(basis(k));
      }
    }
    return out;
  }

  std::uint64_t GradedModule::cardinality() const {
    std::uint64_t n = 1;
    for (std::size_t k = 0; k < basis_size(); ++k) {
      n *= _space.coordinate_size(k);
    }
    return n;
  }

  MemberSet product_span(GradedModule const& M, std::vector<RingElement> const& as,
                         std::vector<ModuleElement> const& xs, std::size_t cap) {
    std::vector<ModuleElement> prods;
    for (auto const& a : as) {
      for (auto const& x : xs) {
        prods.push_back(M.act(a, x));
      }
    }
    return span(M, prods, cap);
  }

  MemberSet component_span(GradedModule const& M, GroupElement h, std::size_t cap) {
    return span(M, M.component_elements(h), cap);
  }

  std::vector<RingElement> ideal_spanning(StructureConstantRing const& ring, GroupElement g) {
    std::vector<RingElement> out;
    auto const               gi = ring.group().inv(g);
    for (auto i : ring.component_basis(g)) {
      for (auto j : ring.component_basis(gi)) {
        out.push_back(ring.multiply(ring.basis(i), ring.basis(j)));
      }
    }
    return out;
  }

  SubmoduleSets S_of(GradedModule const& M, SubmoduleSets const& N, std::size_t cap) {
    auto const&   G = M.group();
    auto const&   S = M.ring();
    SubmoduleSets out;
    for (GroupElement g = 0; g < G.order(); ++g) {
      out.components.push_back(product_span(M, ideal_spanning(S, g), N.components[g].members(), cap));
    }
    // closed under every ring basis element
    for (std::size_t i = 0; i < S.basis_size(); ++i) {
      for (GroupElement g = 0; g < G.order(); ++g) {
        auto const& target = out.components[G.op(S.degree(i), g)];
        for (auto const& x : out.components[g].members()) {
          if (!target.contains(M.act(S.basis(i), x))) {
            throw TheoremViolation("S(M) is not closed under " + S.basis_name(i));
          }
        }
      }
    }
    return out;
  }

  SubmoduleSets S_of(GradedModule const& M, std::size_t cap) {
    SubmoduleSets whole;
    for (GroupElement g = 0; g < M.group().order(); ++g) {
      whole.components.push_back(component_span(M, g, cap));
    }
    return S_of(M, whole, cap);
  }

  bool same_sets(SubmoduleSets const& a, SubmoduleSets const& b) {
    if (a.components.size() != b.components.size()) {
      return false;
    }
    for (std::size_t g = 0; g < a.components.size(); ++g) {
      if (!a.components[g].same_members(b.components[g])) {
        return false;
      }
    }
    return true;
  }

  Verdict is_symmetric_module(GradedModule const& M, std::size_t cap) {
    auto const& G = M.group();
    for (GroupElement g = 0; g < G.order(); ++g) {
      auto lhs = component_span(M, g, cap);
      auto rhs = product_span(M, ideal_spanning(M.ring(), g), M.component_elements(g), cap);
      if (!lhs.same_members(rhs)) {
        return Verdict::no("M_g != S_g S_{g^-1} M_g at g=" + G.name(g));
      }
    }
    return Verdict::yes("exhaustive");
  }

  Verdict corner_module_condition(GradedModule const& M, RingElement const& u, ElementSet const& H,
                                  std::size_t cap) {
    auto const& G = M.group();
    auto const& S = M.ring();
    for (auto g : H) {
      auto const sg  = times(S, u, S.component_elements(g));
      auto const sgi = times(S, u, S.component_elements(G.inv(g)));
      std::vector<RingElement> ideal;
      for (auto const& a : sg) {
        for (auto const& b : sgi) {
          ideal.push_back(S.multiply(a, b));
        }
      }
      for (GroupElement h = 0; h < G.order(); ++h) {
        auto lhs = product_span(M, sg, times(M, u, M.component_elements(h)), cap);
        auto rhs = product_span(M, ideal, times(M, u, M.component_elements(G.op(g, h))), cap);
        if (!lhs.same_members(rhs)) {
          return Verdict::no("S_g M_h != S_g S_{g^-1} M_gh at (g,h)=(" + G.name(g) + "," + G.name(h) + ")");
        }
      }
    }
    return Verdict::yes("exhaustive");
  }

  Verdict is_epsilon_strong_module(GradedModule const& M, std::size_t cap) {
    return corner_module_condition(M, M.ring().one(), M.group().all(), cap);
  }

  Verdict dade_condition(GradedModule const& M, Verdict const& ring_epsilon_strong, std::size_t cap) {
    auto v = is_epsilon_strong_module(M, cap);
    if (v.is_no() && ring_epsilon_strong.is_yes()) {
      throw TheoremViolation("Dade condition fails over an epsilon-strong ring: " + v.detail);
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // fixtures
  ////////////////////////////////////////////////////////////////////////

  GradedModule regular_module(StructureConstantRing const& ring) {
    ModuleSpec spec;
    spec.basis_names.assign(ring.spec().basis_names.begin(), ring.spec().basis_names.end());
    spec.degrees = ring.spec().degrees;
    spec.torsion = ring.spec().torsion;
    auto const n = ring.basis_size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!ring.basis_product(i, j).empty()) {
          spec.action.push_back({i, j, ring.basis_product(i, j)});
        }
      }
    }
    return GradedModule::build(ring, std::move(spec));
  }

  GradedModule zero_module(StructureConstantRing const& ring) {
    return GradedModule::build(ring, ModuleSpec{});
  }

  GradedModule column_module(MatrixFixture const& F, std::array<bool, 3> ideal_rows,
                             std::array<GroupElement, 3> degrees) {
    auto const& R     = F.ring.coeff();
    auto const  bords = R.additive_orders(F.generator);
    ModuleSpec  spec;
    auto        row_scale = [&](std::size_t r) { return ideal_rows[r] ? F.generator : R.one(); };
    for (std::size_t r = 0; r < 3; ++r) {
      spec.basis_names.push_back("c" + std::to_string(r + 1) + (ideal_rows[r] ? "(" + R.to_string(F.generator) + ")" : ""));
      spec.degrees.push_back(degrees[r]);
      spec.torsion.push_back(ideal_rows[r] ? bords : R.moduli());
    }
    // (s E_rc)(t e_c) = st e_r
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        auto const s  = is_ideal_position(r, c) ? F.generator : R.one();
        auto const st = R.mul(s, row_scale(c));
        auto const k  = divide(R, st, row_scale(r));
        if (!k) {
          throw std::invalid_argument("column pattern is not closed under the matrix action");
        }
        spec.action.push_back({3 * r + c, c, {{r, *k}}});
      }
    }
    return GradedModule::build(F.ring, std::move(spec));
  }

  GradedModule shifted_trivial_module(StructureConstantRing const& trivial, GroupElement g) {
    if (trivial.basis_size() != 1) {
      throw std::invalid_argument("expected a rank-one trivial fixture");
    }
    ModuleSpec spec;
    spec.basis_names = {"m", "n"};
    spec.degrees     = {trivial.group().identity(), g};
    for (std::size_t i = 0; i < trivial.basis_size(); ++i) {
      auto const c = trivial.one()[i];
      if (c.code != 0) {
        spec.action.push_back({i, 0, {{0, c}}});
        spec.action.push_back({i, 1, {{1, c}}});
      }
    }
    return GradedModule::build(trivial, std::move(spec));
  }

}  // namespace grady
