#pragma once

// Peeling an epsilon-strong ring into strongly graded corners e S plus a
// trivially graded remainder, crossed-product checks on the summands and
// the induced splitting of graded modules.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grady/lattice.hpp"
#include "grady/module.hpp"

namespace grady {

  enum class RemainderKind { Zero, TrivialGradation, EpsilonStrong };
  char const* to_string(RemainderKind k) noexcept;

  template <typename E>
  struct Summand {
    E          idempotent;
    ElementSet N;
  };

  template <typename E>
  struct Round {
    E                                 unit;  // corner idempotent 1_(j)
    BooleanSemigroup<E>               semigroup;
    std::vector<CentralStatus>        status;  // per minimal element
    std::vector<Summand<E>>           peeled;
    std::optional<E>                  remainder;
    RemainderKind                     remainder_kind = RemainderKind::Zero;
    std::vector<std::size_t>          not_central;  // indices into semigroup
  };

  template <typename E>
  struct DecompositionReport {
    std::vector<Round<E>>   rounds;
    std::vector<Summand<E>> summands;  // all peeled summands in order
    std::optional<E>        remainder;
    RemainderKind           remainder_kind = RemainderKind::Zero;
    bool                    success = false;
    std::string             halted;  // reason when !success
  };

  // eps restricted to the corner u S: u eps_g with factorizations (u u_i, u v_i).
  template <typename B>
  EpsilonData<typename B::Element> corner_epsilon(B const& S, EpsilonData<typename B::Element> const& eps,
                                                  typename B::Element const& u) {
    auto out = eps;
    for (auto& entry : out.entries) {
      entry.epsilon = S.mul(u, entry.epsilon);
      entry.zero    = S.is_zero(entry.epsilon);
      for (auto& [a, b] : entry.factorization) {
        a = S.mul(u, a);
        b = S.mul(u, b);
      }
    }
    return out;
  }

  template <typename B>
  Round<typename B::Element> decompose_once(B const& S, EpsilonData<typename B::Element> const& eps) {
    using E       = typename B::Element;
    auto const& G = S.group();
    Round<E>    round;
    round.unit      = eps[G.identity()];
    round.semigroup = boolean_semigroup(S, eps);
    auto const& sg  = round.semigroup;
    for (auto i : sg.minimal) {
      auto st = epsilon_central_status(S, sg, eps, i);
      if (!st.epsilon_central()) {
        round.not_central.push_back(i);
      }
      round.status.push_back(st);
    }
    if (!round.not_central.empty()) {
      return round;
    }
    auto rest = round.unit;
    for (std::size_t k = 0; k < sg.minimal.size(); ++k) {
      auto const& e = sg.elements[sg.minimal[k]];
      round.peeled.push_back({e, round.status[k].N});
      rest = S.sub(rest, e);
    }
    // orthogonality and the sum
    auto const& peeled = round.peeled;
    for (std::size_t a = 0; a < peeled.size(); ++a) {
      for (std::size_t b = 0; b < peeled.size(); ++b) {
        auto p = S.mul(peeled[a].idempotent, peeled[b].idempotent);
        if (a == b ? p != peeled[a].idempotent : !S.is_zero(p)) {
          throw TheoremViolation("minimal elements are not orthogonal idempotents");
        }
      }
      if (!S.is_zero(S.mul(peeled[a].idempotent, rest))) {
        throw TheoremViolation("remainder is not orthogonal to a peeled idempotent");
      }
    }
    if (S.mul(rest, rest) != rest) {
      throw TheoremViolation("remainder is not idempotent");
    }
    round.remainder = rest;
    if (S.is_zero(rest)) {
      round.remainder_kind = RemainderKind::Zero;
    } else {
      bool trivial = true;
      for (GroupElement g = 0; g < G.order() && trivial; ++g) {
        trivial = g == G.identity() || S.is_zero(S.mul(rest, eps[g]));
      }
      round.remainder_kind = trivial ? RemainderKind::TrivialGradation : RemainderKind::EpsilonStrong;
    }
    return round;
  }

  template <typename B>
  DecompositionReport<typename B::Element> peel(B const& S, EpsilonData<typename B::Element> const& eps) {
    using E = typename B::Element;
    DecompositionReport<E> rep;
    auto                   current = eps;
    for (;;) {
      auto round = decompose_once(S, current);
      if (!rep.rounds.empty() && round.semigroup.size() >= rep.rounds.back().semigroup.size()) {
        throw TheoremViolation("|B(E)| did not decrease between rounds");
      }
      bool const halted = !round.not_central.empty();
      if (halted) {
        std::string names;
        for (auto i : round.not_central) {
          names += (names.empty() ? "" : ", ") + S.render(round.semigroup.elements[i]);
        }
        rep.halted = "minimal elements not epsilon-central: " + names;
      }
      for (auto const& s : round.peeled) {
        rep.summands.push_back(s);
      }
      auto kind = round.remainder_kind;
      auto rest = round.remainder;
      rep.rounds.push_back(std::move(round));
      if (halted) {
        return rep;
      }
      if (kind != RemainderKind::EpsilonStrong) {
        rep.remainder      = rest;
        rep.remainder_kind = kind;
        rep.success        = true;
        return rep;
      }
      current = corner_epsilon(S, eps, *rest);
    }
  }

  // (eS_g)(eS_h) = eS_gh for g, h in N and eS_g = 0 outside N.
  inline Verdict verify_strong_summand(ScBackend const& S, RingElement const& e, ElementSet const& N) {
    auto const& ring = S.ring();
    auto const& G    = S.group();
    auto        cap  = S.bounds().closure_cap;
    auto corner = [&](GroupElement g) {
      auto xs = ring.component_elements(g);
      for (auto& x : xs) {
        x = ring.multiply(e, x);
      }
      return xs;
    };
    for (GroupElement g = 0; g < G.order(); ++g) {
      if (N.contains(g)) {
        continue;
      }
      for (auto const& x : corner(g)) {
        if (!x.is_zero()) {
          return Verdict::no("eS_" + G.name(g) + " != 0 outside N");
        }
      }
    }
    for (auto g : N) {
      auto const xs = corner(g);
      for (auto h : N) {
        auto const               ys = corner(h);
        std::vector<RingElement> prods;
        for (auto const& x : xs) {
          for (auto const& y : ys) {
            prods.push_back(ring.multiply(x, y));
          }
        }
        auto lhs = span_of(ring, prods, cap);
        auto rhs = span_of(ring, corner(G.op(g, h)), cap);
        if (!module_equal(lhs, rhs)) {
          return Verdict::no("(eS_" + G.name(g) + ")(eS_" + G.name(h) + ") != eS_" + G.name(G.op(g, h)));
        }
      }
    }
    return Verdict::yes("exhaustive");
  }

  // e eps_g = e on N, which makes e eps_g the identity of every corner
  // component product; e m = 0 on the available monomials outside N.
  inline Verdict verify_strong_summand(LpaBackend const& S, EpsilonData<LpaElement> const& eps,
                                       LpaElement const& e, ElementSet const& N) {
    auto const& G        = S.group();
    bool        complete = true;
    for (GroupElement g = 0; g < G.order(); ++g) {
      if (N.contains(g)) {
        if (S.mul(e, eps[g]) != e) {
          return Verdict::no("e eps_" + G.name(g) + " != e");
        }
        continue;
      }
      auto gens = S.component_generators(g);
      complete  = complete && gens.complete;
      for (auto const& m : gens.elements) {
        if (!S.is_zero(S.mul(e, m))) {
          return Verdict::no("e S_" + G.name(g) + " != 0 outside N");
        }
      }
    }
    if (!complete) {
      return Verdict::yes("identity-based; vanishing checked on monomials up to length "
                          + std::to_string(S.bounds().max_len));
    }
    return Verdict::yes("identity-based");
  }

  template <typename E>
  struct CrossedSummand {
    Summand<E>                    summand;
    std::vector<GroupElement>     degrees;
    std::vector<CrossedResult<E>> results;  // per g in N
    Verdict                       verdict;
  };

  template <typename B>
  std::vector<CrossedSummand<typename B::Element>> crossed_decomposition(
      B const& S, EpsilonData<typename B::Element> const& eps, DecompositionReport<typename B::Element> const& rep) {
    using E = typename B::Element;
    using K = typename CrossedResult<E>::Kind;
    std::vector<CrossedSummand<E>> out;
    for (auto const& s : rep.summands) {
      CrossedSummand<E> cs{s, {}, {}, Verdict::yes("unit found in every eS_g")};
      bool              unsure = false;
      for (auto g : s.N) {
        auto r = crossed_pair_search(S, eps, g, s.idempotent);
        cs.degrees.push_back(g);
        if (r.kind == K::Absent && !cs.verdict.is_no()) {
          cs.verdict = Verdict::no("no unit of eS in eS_" + S.group().name(g) + " (" + r.detail + ")");
        } else if (r.kind == K::Unverified && !unsure) {
          unsure = true;
          if (!cs.verdict.is_no()) {
            cs.verdict = Verdict::unverified(r.detail);
          }
        }
        cs.results.push_back(std::move(r));
      }
      out.push_back(std::move(cs));
    }
    return out;
  }

  // |S| = product of the corner sizes |e_i S| |e'S|.
  bool reconstructs(ScBackend const& S, DecompositionReport<RingElement> const& rep);

  struct ModuleSummand {
    RingElement                idempotent;
    ElementSet                 H;     // N(e) for peeled summands, all of G for the remainder
    bool                       remainder = false;
    std::vector<std::uint64_t> sizes;  // |e M_h| per h
    Verdict                    verdict;
  };

  std::vector<ModuleSummand> decompose_module(GradedModule const& M, DecompositionReport<RingElement> const& rep,
                                              std::size_t cap = kDefaultClosureCap);

}  // namespace grady
