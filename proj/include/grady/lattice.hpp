#pragma once

// The boolean semigroup generated by the epsilons, N(r), the gamma maps and
// the epsilon-centrality test for minimal elements.

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grady/grading.hpp"

namespace grady {

  template <typename E>
  struct BooleanSemigroup {
    std::vector<E>                        elements;  // discovery order, 1_S first
    std::vector<std::string>              labels;
    std::vector<std::vector<std::size_t>> product;   // product[i][j] = index of a_i a_j
    std::vector<std::size_t>              generator;  // generator[g] = index of eps_g
    std::vector<std::size_t>              minimal;    // nonzero minimal elements
    std::optional<std::size_t>            zero;

    std::size_t size() const noexcept { return elements.size(); }
    std::size_t nonzero_size() const noexcept { return size() - (zero ? 1 : 0); }

    // a <= b iff a = ab
    bool leq(std::size_t a, std::size_t b) const { return product[a][b] == a; }

    std::optional<std::size_t> index_of(E const& x) const {
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == x) {
          return i;
        }
      }
      return std::nullopt;
    }

    bool is_minimal(std::size_t i) const {
      return std::find(minimal.begin(), minimal.end(), i) != minimal.end();
    }
  };

  template <typename B>
  BooleanSemigroup<typename B::Element> boolean_semigroup(B const& S,
                                                          EpsilonData<typename B::Element> const& eps) {
    using E = typename B::Element;
    auto const&         G = S.group();
    BooleanSemigroup<E> out;
    auto                find = [&](E const& x) { return out.index_of(x); };
    auto                push = [&](E x, std::string label) {
      if (S.mul(x, x) != x) {
        throw NonIdempotentProduct(label + " is not idempotent");
      }
      out.elements.push_back(std::move(x));
      out.labels.push_back(std::move(label));
      return out.elements.size() - 1;
    };

    // identity first so that 1_S always sits at index 0
    push(eps[G.identity()], "eps_" + G.name(G.identity()));
    out.generator.assign(G.order(), 0);
    for (GroupElement g = 0; g < G.order(); ++g) {
      auto i = find(eps[g]);
      out.generator[g] = i ? *i : push(eps[g], "eps_" + G.name(g));
    }
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      queue.push_back(i);
    }
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (GroupElement g = 0; g < G.order(); ++g) {
        auto x = S.mul(out.elements[i], eps[g]);
        if (!find(x)) {
          queue.push_back(push(std::move(x), out.labels[i] + " eps_" + G.name(g)));
        }
      }
    }

    auto const n = out.elements.size();
    out.product.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto x  = S.mul(out.elements[i], out.elements[j]);
        auto k  = find(x);
        if (!k) {
          throw NonIdempotentProduct(out.labels[i] + " * " + out.labels[j] + " leaves the semigroup");
        }
        if (S.mul(out.elements[j], out.elements[i]) != x) {
          throw NonIdempotentProduct(out.labels[i] + " and " + out.labels[j] + " do not commute");
        }
        out.product[i][j] = *k;
      }
      if (S.is_zero(out.elements[i])) {
        out.zero = i;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (out.zero == i) {
        continue;
      }
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        minimal = j == i || out.zero == j || !out.leq(j, i);
      }
      if (minimal) {
        out.minimal.push_back(i);
      }
    }
    return out;
  }

  // {g : r eps_g = r}. For minimal r this must equal {g : eps_g r != 0}.
  template <typename B>
  ElementSet N_of(B const& S, EpsilonData<typename B::Element> const& eps,
                  typename B::Element const& r, bool minimal) {
    ElementSet n, nonzero;
    for (GroupElement g = 0; g < S.group().order(); ++g) {
      if (S.mul(r, eps[g]) == r) {
        n.insert(g);
      }
      if (!S.is_zero(S.mul(eps[g], r))) {
        nonzero.insert(g);
      }
    }
    if (minimal && n != nonzero) {
      throw MinimalityContradiction("N(" + S.render(r) + ") = " + to_string(S.group(), n)
                                    + " but eps_g r != 0 on " + to_string(S.group(), nonzero));
    }
    return n;
  }

  template <typename B>
  ElementSet N_of(B const& S, BooleanSemigroup<typename B::Element> const& sg,
                  EpsilonData<typename B::Element> const& eps, std::size_t i) {
    return N_of(S, eps, sg.elements[i], sg.is_minimal(i));
  }

  // gamma_g(s) = sum u_i s v_i over the stored factorization of eps_g
  template <typename B>
  typename B::Element gamma_apply(B const& S, EpsilonData<typename B::Element> const& eps, GroupElement g,
                                  typename B::Element const& s) {
    auto acc = S.zero();
    for (auto const& [u, v] : eps.entries[g].factorization) {
      acc = S.add(acc, S.mul(S.mul(u, s), v));
    }
    return acc;
  }

  template <typename B>
  bool commutes_with(B const& S, typename B::Element const& r, std::vector<typename B::Element> const& xs) {
    return std::all_of(xs.begin(), xs.end(), [&](auto const& x) { return S.mul(r, x) == S.mul(x, r); });
  }

  template <typename B>
  bool is_central_in_R(B const& S, typename B::Element const& r) {
    return commutes_with(S, r, S.component_generators(S.group().identity()).elements);
  }

  // gamma_g(r eps_{g^-1}) = r eps_g for all g. Throws NotCentralInR.
  template <typename B>
  bool is_gamma_invariant(B const& S, EpsilonData<typename B::Element> const& eps,
                          typename B::Element const& r) {
    if (!is_central_in_R(S, r)) {
      throw NotCentralInR(S.render(r) + " is not central in the principal component");
    }
    auto const& G = S.group();
    for (GroupElement g = 0; g < G.order(); ++g) {
      if (gamma_apply(S, eps, g, S.mul(r, eps[G.inv(g)])) != S.mul(r, eps[g])) {
        return false;
      }
    }
    return true;
  }

  // Commutation with a generating set of the algebra, which decides
  // centrality on both backends.
  template <typename B>
  Verdict is_central_in_S(B const& S, typename B::Element const& r) {
    for (auto const& x : S.algebra_generators()) {
      if (S.mul(r, x) != S.mul(x, r)) {
        return Verdict::no("does not commute with " + S.render(x));
      }
    }
    return Verdict::yes("commutes with every algebra generator");
  }

  struct CentralStatus {
    bool       gamma_invariant = false;
    bool       central = false;
    bool       subgroup = false;
    ElementSet N;

    bool epsilon_central() const noexcept { return gamma_invariant && central && subgroup; }
  };

  // Evaluates the three equivalent conditions independently; any
  // disagreement is a TheoremViolation.
  template <typename B>
  CentralStatus epsilon_central_status(B const& S, BooleanSemigroup<typename B::Element> const& sg,
                                       EpsilonData<typename B::Element> const& eps, std::size_t i) {
    auto const&   r = sg.elements[i];
    CentralStatus st;
    st.N               = N_of(S, sg, eps, i);
    st.subgroup        = is_subgroup(S.group(), st.N);
    st.central         = is_central_in_S(S, r).is_yes();
    st.gamma_invariant = is_gamma_invariant(S, eps, r);
    if (st.gamma_invariant != st.central || st.central != st.subgroup) {
      throw TheoremViolation("epsilon-centrality conditions disagree on " + S.render(r) + ": gamma-invariant="
                             + (st.gamma_invariant ? "yes" : "no") + " central=" + (st.central ? "yes" : "no")
                             + " subgroup=" + (st.subgroup ? "yes" : "no"));
    }
    return st;
  }

  template <typename E>
  struct EpsilonMeet {
    E    all;      // product over every g
    E    support;  // product over g with S_g != 0
    bool all_nonzero = false;
    bool support_nonzero = false;
  };

  template <typename B>
  EpsilonMeet<typename B::Element> epsilon_meet(B const& S, EpsilonData<typename B::Element> const& eps) {
    EpsilonMeet<typename B::Element> m{S.one(), S.one()};
    for (GroupElement g = 0; g < S.group().order(); ++g) {
      m.all = S.mul(m.all, eps[g]);
      if (!eps.entries[g].zero) {
        m.support = S.mul(m.support, eps[g]);
      }
    }
    m.all_nonzero     = !S.is_zero(m.all);
    m.support_nonzero = !S.is_zero(m.support);
    return m;
  }

  // Idempotents of the principal component commuting with its generators.
  // Enumerates R when it has at most `cap` elements, else falls back to the
  // semigroup elements.
  std::vector<RingElement> central_candidates(ScBackend const& S, BooleanSemigroup<RingElement> const& sg,
                                              std::size_t cap);

  // Sums of vertex subsets that commute with the available generators of
  // the principal component, together with the semigroup elements.
  std::vector<LpaElement> central_candidates(LpaBackend const& S, BooleanSemigroup<LpaElement> const& sg,
                                             std::size_t cap);

}  // namespace grady
