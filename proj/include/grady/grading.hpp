#pragma once

// Classification of a grading: epsilon idempotents with factorization
// witnesses and the verdicts graded / symmetric / nearly epsilon-strong /
// epsilon-strong / strong / epsilon-crossed.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grady/backend.hpp"
#include "grady/errors.hpp"

namespace grady {

  struct Verdict {
    enum class Kind { Yes, No, Unverified };
    Kind        kind = Kind::Unverified;
    std::string detail;

    static Verdict yes(std::string d = {}) { return {Kind::Yes, std::move(d)}; }
    static Verdict no(std::string d = {}) { return {Kind::No, std::move(d)}; }
    static Verdict unverified(std::string d = {}) { return {Kind::Unverified, std::move(d)}; }

    bool is_yes() const noexcept { return kind == Kind::Yes; }
    bool is_no() const noexcept { return kind == Kind::No; }
    bool decided() const noexcept { return kind != Kind::Unverified; }
  };

  char const* to_string(Verdict::Kind k) noexcept;

  enum class EpsilonStatus { Proved, SampleVerified };
  char const* to_string(EpsilonStatus s) noexcept;

  template <typename E>
  struct EpsilonEntry {
    GroupElement                g = 0;
    bool                        zero = false;
    E                           epsilon;
    std::vector<std::pair<E, E>> factorization;  // u_i in S_g, v_i in S_{g^-1}
    EpsilonStatus               status = EpsilonStatus::Proved;
  };

  template <typename E>
  struct EpsilonData {
    std::vector<EpsilonEntry<E>> entries;  // indexed by group element
    std::size_t                  max_len = 0;

    E const& operator[](GroupElement g) const { return entries[g].epsilon; }
    bool proved() const {
      return std::all_of(entries.begin(), entries.end(), [](auto const& e) {
        return e.status == EpsilonStatus::Proved;
      });
    }
  };

  template <typename E>
  struct EpsilonResult {
    enum class Kind { Ok, Zero, NoIdentity, Unverified };
    Kind                           kind = Kind::Unverified;
    std::optional<EpsilonEntry<E>> entry;
    std::string                    reason;
  };

  struct GradingOptions {
    // Read factorizations from generators in reverse order, to obtain an
    // alternative factorization of each epsilon.
    bool reverse_generators = false;
  };

  ////////////////////////////////////////////////////////////////////////
  // helpers
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename B>
    bool left_unit_on(B const& S, typename B::Element const& u,
                      std::vector<typename B::Element> const& xs) {
      return std::all_of(xs.begin(), xs.end(), [&](auto const& x) { return S.mul(u, x) == x; });
    }

    template <typename B>
    bool right_unit_on(B const& S, typename B::Element const& u,
                       std::vector<typename B::Element> const& xs) {
      return std::all_of(xs.begin(), xs.end(), [&](auto const& x) { return S.mul(x, u) == x; });
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // compute_epsilon
  ////////////////////////////////////////////////////////////////////////

  inline EpsilonResult<RingElement> compute_epsilon(ScBackend const& S, GroupElement g,
                                                    GradingOptions opts = {}) {
    using R          = EpsilonResult<RingElement>;
    auto const& ring = S.ring();
    auto const  ginv = S.group().inv(g);
    auto const  Sg   = ring.component_basis(g);
    auto const  Sgi  = ring.component_basis(ginv);

    EpsilonEntry<RingElement> entry;
    entry.g = g;
    if (Sg.empty()) {
      entry.zero    = true;
      entry.epsilon = ring.zero();
      return {R::Kind::Zero, std::move(entry), {}};
    }
    if (g == S.group().identity()) {
      entry.epsilon       = ring.one();
      entry.factorization = {{ring.one(), ring.one()}};
      return {R::Kind::Ok, std::move(entry), {}};
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto i : Sg) {
      for (auto j : Sgi) {
        pairs.emplace_back(i, j);
      }
    }
    if (opts.reverse_generators) {
      std::reverse(pairs.begin(), pairs.end());
    }
    std::vector<RingElement> gens;
    for (auto [i, j] : pairs) {
      gens.push_back(ring.multiply(ring.basis(i), ring.basis(j)));
    }
    auto M  = module_closure(ring, gens, ClosureActions::both(), S.bounds().closure_cap);
    auto id = M.identity(ring);
    auto sg = ring.component_elements(g);
    auto si = ring.component_elements(ginv);
    if (!id || !detail::left_unit_on(S, *id, sg) || !detail::right_unit_on(S, *id, si)) {
      return {R::Kind::NoIdentity, std::nullopt,
              "S_" + S.group().name(g) + "S_" + S.group().name(ginv)
                  + " has no identity acting as a unit on S_" + S.group().name(g)};
    }
    entry.epsilon = *id;
    for (auto const& w : M.witness(*id)) {
      auto [i, j] = pairs[w.generator];
      auto u = ring.scale(w.scalar, ring.multiply(w.left, ring.basis(i)));
      auto v = ring.multiply(ring.basis(j), w.right);
      entry.factorization.emplace_back(std::move(u), std::move(v));
    }
    return {R::Kind::Ok, std::move(entry), {}};
  }

  inline EpsilonResult<LpaElement> compute_epsilon(LpaBackend const& S, GroupElement g,
                                                   GradingOptions opts = {}) {
    using R       = EpsilonResult<LpaElement>;
    auto const& L = S.algebra();
    auto const  ginv    = S.group().inv(g);
    auto const  support = L.component_support(g);

    EpsilonEntry<LpaElement> entry;
    entry.g = g;
    if (support.empty()) {
      entry.zero = true;
      return {R::Kind::Zero, std::move(entry), {}};
    }
    if (g == S.group().identity()) {
      entry.epsilon       = L.one();
      entry.factorization = {{L.one(), L.one()}};
      return {R::Kind::Ok, std::move(entry), {}};
    }

    auto eps = L.zero();
    for (auto v : support) {
      eps = L.add(eps, L.vertex(v));
    }
    auto sg = S.component_generators(g);
    auto si = S.component_generators(ginv);
    if (!detail::left_unit_on(S, eps, sg.elements) || !detail::right_unit_on(S, eps, si.elements)) {
      return {R::Kind::NoIdentity, std::nullopt,
              "support idempotent is not a unit on S_" + S.group().name(g)};
    }
    std::vector<std::size_t> order(support.begin(), support.end());
    if (opts.reverse_generators) {
      std::reverse(order.begin(), order.end());
    }
    for (auto v : order) {
      auto f = L.ck2_factorization(v, g, S.bounds().max_depth);
      if (!f.terms) {
        return {R::Kind::Unverified, std::nullopt,
                "no factorization at " + L.graph().vertex_name(v) + ": " + f.reason};
      }
      auto terms = *f.terms;
      if (opts.reverse_generators) {
        std::reverse(terms.begin(), terms.end());
      }
      for (auto const& m : terms) {
        entry.factorization.emplace_back(m, L.star(m));
      }
    }
    entry.epsilon = std::move(eps);
    entry.status  = sg.complete && si.complete ? EpsilonStatus::Proved : EpsilonStatus::SampleVerified;
    return {R::Kind::Ok, std::move(entry), {}};
  }

  ////////////////////////////////////////////////////////////////////////
  // verdicts
  ////////////////////////////////////////////////////////////////////////

  // Homogeneity of a raw table; No names the first offending pair.
  Verdict check_graded(ScRingSpec const& spec);
  Verdict check_graded(StructureConstantRing const& ring);
  Verdict check_graded(LeavittAlgebra const& algebra);

  template <typename E>
  struct EpsilonStrongResult {
    Verdict                       verdict;
    std::optional<EpsilonData<E>> data;
    std::optional<GroupElement>   failing;
  };

  template <typename B>
  EpsilonStrongResult<typename B::Element> is_epsilon_strong(B const& S, GradingOptions opts = {}) {
    using E = typename B::Element;
    EpsilonData<E> data;
    data.max_len = S.bounds().max_len;
    for (GroupElement g = 0; g < S.group().order(); ++g) {
      auto r = compute_epsilon(S, g, opts);
      using K = typename EpsilonResult<E>::Kind;
      if (r.kind == K::NoIdentity) {
        return {Verdict::no("NoIdentity at g=" + S.group().name(g) + ": " + r.reason), std::nullopt, g};
      }
      if (r.kind == K::Unverified) {
        return {Verdict::unverified("at g=" + S.group().name(g) + ": " + r.reason), std::nullopt, g};
      }
      data.entries.push_back(std::move(*r.entry));
    }
    // epsilon_{g^-1} is a right unit on S_g
    for (GroupElement g = 0; g < S.group().order(); ++g) {
      auto const& right = data[S.group().inv(g)];
      auto        gens  = S.component_generators(g);
      if (!detail::right_unit_on(S, right, gens.elements)) {
        return {Verdict::no("epsilon_" + S.group().name(S.group().inv(g)) + " is not a right unit on S_"
                            + S.group().name(g)),
                std::nullopt, g};
      }
    }
    auto detail = data.proved() ? std::string("all components proved")
                                : "verified on monomials up to length " + std::to_string(data.max_len);
    return {Verdict::yes(detail), std::move(data), std::nullopt};
  }

  inline Verdict is_symmetrically_graded(ScBackend const& S) {
    auto const& ring = S.ring();
    for (auto g : S.support()) {
      auto const               ginv = S.group().inv(g);
      std::vector<RingElement> triples;
      for (auto i : ring.component_basis(g)) {
        for (auto j : ring.component_basis(ginv)) {
          auto ij = ring.multiply(ring.basis(i), ring.basis(j));
          for (auto k : ring.component_basis(g)) {
            triples.push_back(ring.multiply(ij, ring.basis(k)));
          }
        }
      }
      auto lhs = span_of(ring, triples, S.bounds().closure_cap);
      auto rhs = span_of(ring, ring.component_elements(g), S.bounds().closure_cap);
      if (!module_equal(lhs, rhs)) {
        return Verdict::no("S_gS_{g^-1}S_g != S_g at g=" + S.group().name(g));
      }
    }
    return Verdict::yes("exhaustive");
  }

  // On the Leavitt backend symmetry follows from a verified epsilon table.
  inline Verdict is_symmetrically_graded(LpaBackend const&, Verdict const& epsilon_strong) {
    if (epsilon_strong.is_yes()) {
      return Verdict::yes("implied by the epsilon table");
    }
    return Verdict::unverified("epsilon table not established");
  }

  Verdict nearly_epsilon_strong(Verdict const& epsilon_strong, bool leavitt);

  template <typename B>
  Verdict is_strongly_graded(B const& S, EpsilonData<typename B::Element> const& eps) {
    std::optional<GroupElement> bad;
    for (GroupElement g = 0; g < S.group().order() && !bad; ++g) {
      if (eps[g] != S.one()) {
        bad = g;
      }
    }
    auto shortcut = bad ? Verdict::no("epsilon_" + S.group().name(*bad) + " != 1")
                        : Verdict::yes("epsilon_g = 1 for all g");
    if constexpr (B::enumerable) {
      auto const& ring = S.ring();
      std::optional<std::pair<GroupElement, GroupElement>> fail;
      for (GroupElement g = 0; g < S.group().order() && !fail; ++g) {
        for (GroupElement h = 0; h < S.group().order() && !fail; ++h) {
          auto lhs = component_product(ring, g, h, S.bounds().closure_cap);
          auto rhs = span_of(ring, ring.component_elements(S.group().op(g, h)), S.bounds().closure_cap);
          if (!module_equal(lhs, rhs)) {
            fail = std::make_pair(g, h);
          }
        }
      }
      if (fail.has_value() == shortcut.is_yes()) {
        throw InternalInconsistency("strong grading shortcut disagrees with S_gS_h = S_gh");
      }
      if (fail) {
        shortcut.detail += "; S_" + S.group().name(fail->first) + "S_" + S.group().name(fail->second)
                         + " != S_" + S.group().name(S.group().op(fail->first, fail->second));
      }
    }
    return shortcut;
  }

  ////////////////////////////////////////////////////////////////////////
  // epsilon-crossed
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct CrossedResult {
    enum class Kind { Found, Absent, Unverified };
    Kind                         kind = Kind::Unverified;
    std::optional<std::pair<E, E>> witness;
    std::size_t                  pairs_checked = 0;
    std::string                  detail;
  };

  namespace detail {
    // All pairs (s,t) of the two spans with s t = left and t s = right.
    template <typename B>
    std::optional<std::pair<typename B::Element, typename B::Element>> search_pairs(
        B const& S, std::vector<typename B::Element> const& xs,
        std::vector<typename B::Element> const& ys, typename B::Element const& left,
        typename B::Element const& right, std::size_t& checked) {
      for (auto const& s : xs) {
        for (auto const& t : ys) {
          ++checked;
          if (S.mul(s, t) == left && S.mul(t, s) == right) {
            return std::make_pair(s, t);
          }
        }
      }
      return std::nullopt;
    }

    template <typename B>
    std::vector<typename B::Element> span_elements(B const& S,
                                                   std::vector<typename B::Element> const& gens,
                                                   std::size_t cap) {
      using E = typename B::Element;
      return SpanEnumeration<E>::enumerate(S.linear_space(), std::span<E const>(gens), cap)
          .members();
    }

    template <typename B>
    std::vector<typename B::Element> times(B const& S, typename B::Element const& e,
                                           std::vector<typename B::Element> xs) {
      for (auto& x : xs) {
        x = S.mul(e, x);
      }
      return xs;
    }
  }  // namespace detail

  // A unit-like pair (s,t) in (u S_g) x (u S_{g^-1}) with st = u eps_g and
  // ts = u eps_{g^-1}. With u = 1 this is the epsilon-crossed condition.
  template <typename B>
  CrossedResult<typename B::Element> crossed_pair_search(
      B const& S, EpsilonData<typename B::Element> const& eps, GroupElement g,
      typename B::Element const& u) {
    using E  = typename B::Element;
    using R  = CrossedResult<E>;
    auto ginv  = S.group().inv(g);
    auto left  = S.mul(u, eps[g]);
    auto right = S.mul(u, eps[ginv]);
    R    out;
    if (left == S.zero() && right == S.zero()) {
      out.kind    = R::Kind::Found;
      out.witness = std::make_pair(S.zero(), S.zero());
      out.detail  = "zero component";
      return out;
    }
    if (g == S.group().identity()) {
      out.kind    = R::Kind::Found;
      out.witness = std::make_pair(u, u);
      out.detail  = "identity";
      return out;
    }
    auto const cap = S.bounds().pair_cap;
    if constexpr (B::enumerable) {
      auto xs = detail::span_elements(S, detail::times(S, u, S.component_generators(g).elements),
                                      S.bounds().closure_cap);
      auto ys = detail::span_elements(S, detail::times(S, u, S.component_generators(ginv).elements),
                                      S.bounds().closure_cap);
      if (xs.size() * ys.size() > cap) {
        out.detail = "pair search exceeds " + std::to_string(cap);
        return out;
      }
      out.witness = detail::search_pairs(S, xs, ys, left, right, out.pairs_checked);
      out.kind    = out.witness ? R::Kind::Found : R::Kind::Absent;
      out.detail  = "exhaustive over " + std::to_string(xs.size()) + "x" + std::to_string(ys.size());
      return out;
    } else {
      std::size_t last_x = 0, last_y = 0;
      for (std::size_t len = 1; len <= S.bounds().max_len; ++len) {
        auto gx = S.component_generators(g, len);
        auto gy = S.component_generators(ginv, len);
        if (gx.elements.size() == last_x && gy.elements.size() == last_y && !(gx.complete && gy.complete)) {
          continue;
        }
        last_x = gx.elements.size();
        last_y = gy.elements.size();
        auto xs_gen = detail::times(S, u, gx.elements);
        auto ys_gen = detail::times(S, u, gy.elements);
        // span sizes are at most |coeff|^n; refuse before enumerating
        double est = 1;
        for (std::size_t k = 0; k < xs_gen.size() + ys_gen.size() && est <= double(cap); ++k) {
          est *= double(S.coeff().size());
        }
        if (est > double(cap)) {
          out.detail = "pair search up to length " + std::to_string(len - 1) + " found nothing; length "
                     + std::to_string(len) + " exceeds " + std::to_string(cap) + " pairs";
          return out;
        }
        auto xs = detail::span_elements(S, xs_gen, cap);
        auto ys = detail::span_elements(S, ys_gen, cap);
        out.witness = detail::search_pairs(S, xs, ys, left, right, out.pairs_checked);
        if (out.witness) {
          out.kind   = R::Kind::Found;
          out.detail = "monomials up to length " + std::to_string(len);
          return out;
        }
        if (gx.complete && gy.complete) {
          out.kind   = R::Kind::Absent;
          out.detail = "exhaustive over complete monomial lists (" + std::to_string(xs.size()) + "x"
                     + std::to_string(ys.size()) + ")";
          return out;
        }
      }
      out.detail = "nothing found up to length " + std::to_string(S.bounds().max_len);
      return out;
    }
  }

  template <typename B>
  CrossedResult<typename B::Element> epsilon_crossed_witness(
      B const& S, EpsilonData<typename B::Element> const& eps, GroupElement g) {
    return crossed_pair_search(S, eps, g, S.one());
  }

  template <typename B>
  Verdict is_epsilon_crossed(B const& S, EpsilonData<typename B::Element> const& eps,
                             std::vector<CrossedResult<typename B::Element>>* per_g = nullptr) {
    using R           = CrossedResult<typename B::Element>;
    bool        unsure = false;
    std::string why;
    for (GroupElement g = 0; g < S.group().order(); ++g) {
      auto r = epsilon_crossed_witness(S, eps, g);
      if (per_g) {
        per_g->push_back(r);
      }
      if (r.kind == R::Kind::Absent) {
        if (per_g) {
          for (GroupElement h = g + 1; h < S.group().order(); ++h) {
            per_g->push_back(epsilon_crossed_witness(S, eps, h));
          }
        }
        return Verdict::no("no pair at g=" + S.group().name(g) + " (" + r.detail + ")");
      }
      if (r.kind == R::Kind::Unverified && !unsure) {
        unsure = true;
        why    = "g=" + S.group().name(g) + ": " + r.detail;
      }
    }
    return unsure ? Verdict::unverified(why) : Verdict::yes("witness for every g");
  }

  // Rank-one propagation on the coefficient equations of st = eps_g,
  // ts = eps_{g^-1} over complete monomial lists. Yes means the equations
  // are contradictory, so no pair exists.
  Verdict crossed_obstruction(LpaBackend const& S, EpsilonData<LpaElement> const& eps, GroupElement g);

  ////////////////////////////////////////////////////////////////////////
  // finite generation of components
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct FgWitness {
    std::vector<E> generators;
    EpsilonStatus  status = EpsilonStatus::Proved;
    std::size_t    test_len = 0;
  };

  inline FgWitness<RingElement> component_fg_witness(ScBackend const& S, GroupElement g) {
    return {S.ring().component_elements(g), EpsilonStatus::Proved, 0};
  }

  // Greedy cover: every canonical monomial of degree g up to test_len is
  // r * x with r in S_e and x in the returned set.
  FgWitness<LpaElement> component_fg_witness(LpaBackend const& S, GroupElement g, std::size_t test_len);

  ////////////////////////////////////////////////////////////////////////
  // report
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct GradingReport {
    Verdict                           graded, symmetric, nearly, epsilon_strong, strong, crossed;
    std::optional<EpsilonData<E>>     epsilon;
    std::vector<CrossedResult<E>>     crossed_per_g;
    std::vector<std::string>          notes;
  };

  // Implications strong => eps-strong => nearly => symmetric and
  // crossed => eps-strong, among decided verdicts.
  template <typename E>
  bool implications_hold(GradingReport<E> const& r) {
    auto implies = [](Verdict const& a, Verdict const& b) {
      return !(a.is_yes() && b.is_no());
    };
    return implies(r.strong, r.epsilon_strong) && implies(r.epsilon_strong, r.nearly)
        && implies(r.nearly, r.symmetric) && implies(r.crossed, r.epsilon_strong);
  }

  GradingReport<RingElement> analyze(ScBackend const& S);
  GradingReport<LpaElement>  analyze(LpaBackend const& S);

}  // namespace grady
