#include "grady/grading.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace grady {

  char const* to_string(Verdict::Kind k) noexcept {
    switch (k) {
      case Verdict::Kind::Yes: return "Yes";
      case Verdict::Kind::No: return "No";
      case Verdict::Kind::Unverified: return "Unverified";
    }
    return "?";
  }

  char const* to_string(EpsilonStatus s) noexcept {
    return s == EpsilonStatus::Proved ? "Proved" : "SampleVerified";
  }

  Verdict check_graded(ScRingSpec const& spec) {
    for (auto const& entry : spec.table) {
      if (entry.i >= spec.degrees.size() || entry.j >= spec.degrees.size()) {
        return Verdict::no("table entry out of range");
      }
      auto const want = spec.group.op(spec.degrees[entry.i], spec.degrees[entry.j]);
      for (auto const& [k, c] : entry.value) {
        if (c.code != 0 && k < spec.degrees.size() && spec.degrees[k] != want) {
          return Verdict::no("b_" + std::to_string(entry.i) + " b_" + std::to_string(entry.j)
                             + " leaves degree " + spec.group.name(want));
        }
      }
    }
    return Verdict::yes("all basis products homogeneous");
  }

  Verdict check_graded(StructureConstantRing const& ring) {
    auto const n = ring.basis_size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const want = ring.group().op(ring.degree(i), ring.degree(j));
        for (auto const& [k, c] : ring.basis_product(i, j)) {
          if (c.code != 0 && ring.degree(k) != want) {
            return Verdict::no("b_" + std::to_string(i) + " b_" + std::to_string(j) + " leaves degree "
                               + ring.group().name(want));
          }
        }
      }
    }
    return Verdict::yes("all basis products homogeneous");
  }

  Verdict check_graded(LeavittAlgebra const&) {
    return Verdict::yes("standard grading; rewriting preserves degree");
  }

  Verdict nearly_epsilon_strong(Verdict const& epsilon_strong, bool leavitt) {
    std::string note = "s-unital and unital coincide for the finite ideals in scope";
    if (leavitt) {
      note += "; finite graph Leavitt path algebras are nearly epsilon-strong for standard gradings";
    }
    switch (epsilon_strong.kind) {
      case Verdict::Kind::Yes: return Verdict::yes(note);
      case Verdict::Kind::No: return Verdict::no(note);
      default: return Verdict::unverified(note);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // crossed obstruction
  ////////////////////////////////////////////////////////////////////////

  namespace {
    enum class VarState { Unknown, Unit, Zero };

    // sum over (a_i, b_j) of c * a_i * b_j = rhs
    struct Equation {
      std::map<std::pair<std::size_t, std::size_t>, Scalar> terms;
      Scalar                                                rhs;
    };

    std::optional<Scalar> inverse(CoeffRing const& R, Scalar c) {
      for (auto x : R.elements()) {
        if (R.mul(x, c) == R.one()) {
          return x;
        }
      }
      return std::nullopt;
    }

    void collect(LpaBackend const& S, std::vector<LpaElement> const& xs,
                 std::vector<LpaElement> const& ys, LpaElement const& rhs, bool swapped,
                 std::map<Monomial, Equation>& eqs) {
      auto const& R = S.coeff();
      for (auto const& [m, c] : rhs.terms()) {
        eqs[m].rhs = c;
      }
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < ys.size(); ++j) {
          auto const prod = swapped ? S.mul(ys[j], xs[i]) : S.mul(xs[i], ys[j]);
          for (auto const& [m, c] : prod.terms()) {
            auto& slot = eqs[m].terms[{i, j}];
            slot       = R.add(slot, c);
          }
        }
      }
    }
  }  // namespace

  Verdict crossed_obstruction(LpaBackend const& S, EpsilonData<LpaElement> const& eps, GroupElement g) {
    auto const& R    = S.coeff();
    auto const  ginv = S.group().inv(g);
    auto        gx   = S.component_generators(g);
    auto        gy   = S.component_generators(ginv);
    if (!gx.complete || !gy.complete) {
      return Verdict::unverified("monomial lists incomplete at length " + std::to_string(S.bounds().max_len));
    }
    std::map<Monomial, Equation> st, ts;
    collect(S, gx.elements, gy.elements, eps[g], false, st);
    collect(S, gx.elements, gy.elements, eps[ginv], true, ts);
    std::vector<Equation> eqs;
    for (auto* m : {&st, &ts}) {
      for (auto& [key, eq] : *m) {
        std::erase_if(eq.terms, [](auto const& t) { return t.second.code == 0; });
        eqs.push_back(std::move(eq));
      }
    }

    std::vector<VarState> a(gx.elements.size(), VarState::Unknown);
    std::vector<VarState> b(gy.elements.size(), VarState::Unknown);
    auto                  set = [](VarState& v, VarState to) {
      if (v != VarState::Unknown && v != to) {
        return false;
      }
      v = to;
      return true;
    };

    for (bool changed = true; changed;) {
      changed = false;
      for (auto const& eq : eqs) {
        std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> live;
        for (auto const& t : eq.terms) {
          if (a[t.first.first] != VarState::Zero && b[t.first.second] != VarState::Zero) {
            live.push_back(t);
          }
        }
        if (live.empty()) {
          if (eq.rhs.code != 0) {
            return Verdict::yes("coefficient equations are contradictory at g=" + S.group().name(g));
          }
          continue;
        }
        if (live.size() != 1 || !R.is_unit(live[0].second)) {
          continue;
        }
        auto [i, j] = live[0].first;
        auto before = std::make_pair(a[i], b[j]);
        if (R.is_unit(R.mul(*inverse(R, live[0].second), eq.rhs))) {
          if (!set(a[i], VarState::Unit) || !set(b[j], VarState::Unit)) {
            return Verdict::yes("a coefficient is forced to be both a unit and zero at g="
                                + S.group().name(g));
          }
        } else if (eq.rhs.code == 0) {
          if (a[i] == VarState::Unit && !set(b[j], VarState::Zero)) {
            return Verdict::yes("a coefficient is forced to be both a unit and zero at g="
                                + S.group().name(g));
          }
          if (b[j] == VarState::Unit && !set(a[i], VarState::Zero)) {
            return Verdict::yes("a coefficient is forced to be both a unit and zero at g="
                                + S.group().name(g));
          }
        }
        changed = changed || before != std::make_pair(a[i], b[j]);
      }
    }
    return Verdict::unverified("propagation found no contradiction");
  }

  ////////////////////////////////////////////////////////////////////////
  // finite generation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // m = r x for some degree-e monomial r; see the cover rule in the header.
    bool covers(LeavittAlgebra const& L, Monomial const& x, Monomial const& m) {
      if (m.beta.size() < x.beta.size() || !std::equal(x.beta.begin(), x.beta.end(), m.beta.begin())) {
        return false;
      }
      Monomial r;
      r.alpha = m.alpha;
      r.beta  = x.alpha;
      r.beta.insert(r.beta.end(), m.beta.begin() + static_cast<std::ptrdiff_t>(x.beta.size()), m.beta.end());
      r.vertex = m.vertex;
      if (!L.is_valid(r) || L.degree_of(r) != L.group().identity()) {
        return false;
      }
      return L.multiply(L.normal_form(r), L.monomial(x)) == L.monomial(m);
    }
  }  // namespace

  FgWitness<LpaElement> component_fg_witness(LpaBackend const& S, GroupElement g, std::size_t test_len) {
    auto const& L    = S.algebra();
    auto        list = L.monomials_of_degree(g, test_len, S.bounds().closure_cap);
    std::vector<Monomial> chosen;
    for (auto const& m : list.monomials) {
      bool hit = std::any_of(chosen.begin(), chosen.end(), [&](auto const& x) { return covers(L, x, m); });
      if (!hit) {
        chosen.push_back(m);
      }
    }
    FgWitness<LpaElement> out;
    for (auto const& x : chosen) {
      out.generators.push_back(L.monomial(x));
    }
    out.status   = list.complete ? EpsilonStatus::Proved : EpsilonStatus::SampleVerified;
    out.test_len = test_len;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // reports
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename B>
    void finish(B const& S, GradingReport<typename B::Element>& rep,
                EpsilonStrongResult<typename B::Element> es) {
      rep.epsilon_strong = es.verdict;
      rep.epsilon        = std::move(es.data);
      if (rep.epsilon) {
        rep.strong  = is_strongly_graded(S, *rep.epsilon);
        rep.crossed = is_epsilon_crossed(S, *rep.epsilon, &rep.crossed_per_g);
      } else if (rep.epsilon_strong.is_no()) {
        rep.strong  = Verdict::no("not epsilon-strong");
        rep.crossed = Verdict::no("not epsilon-strong");
      } else {
        rep.strong  = Verdict::unverified("epsilon table not established");
        rep.crossed = Verdict::unverified("epsilon table not established");
      }
      if (!implications_hold(rep)) {
        throw InternalInconsistency("grading verdicts violate the implication chain");
      }
    }
  }  // namespace

  GradingReport<RingElement> analyze(ScBackend const& S) {
    GradingReport<RingElement> rep;
    rep.graded    = check_graded(S.ring());
    rep.symmetric = is_symmetrically_graded(S);
    auto es       = is_epsilon_strong(S);
    rep.nearly    = nearly_epsilon_strong(es.verdict, false);
    finish(S, rep, std::move(es));
    return rep;
  }

  GradingReport<LpaElement> analyze(LpaBackend const& S) {
    GradingReport<LpaElement> rep;
    rep.graded    = check_graded(S.algebra());
    auto es       = is_epsilon_strong(S);
    rep.symmetric = is_symmetrically_graded(S, es.verdict);
    rep.nearly    = nearly_epsilon_strong(es.verdict, true);
    finish(S, rep, std::move(es));
    if (rep.epsilon && !rep.epsilon->proved()) {
      rep.notes.push_back("epsilon verified on monomials up to length "
                          + std::to_string(S.bounds().max_len) + " (graph has cycles)");
    }
    return rep;
  }

}  // namespace grady
