// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grady/cli.hpp"
#include "grady/decomposition.hpp"
#include "grady/io.hpp"
#include "grady/sc_fixtures.hpp"

using namespace grady;

namespace {
  struct Check {
    std::size_t              violations = 0;
    std::vector<std::string> first;

    void operator()(bool ok, std::string const& what) {
      if (!ok) {
        ++violations;
        if (first.size() < 5) {
          first.push_back(what);
        }
      }
    }
  };

  bool run_criterion(int n, std::string const& title, double limit_s, std::function<void(Check&)> body) {
    Check c;
    auto  t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (std::exception const& e) {
      c(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = limit_s <= 0 || ms < static_cast<long long>(limit_s * 1000);
    bool ok      = c.violations == 0 && in_time;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << ms << " ms";
    if (limit_s > 0) {
      std::cout << ", limit " << limit_s << " s";
    }
    std::cout << ", " << c.violations << " violations)\n";
    for (auto const& w : c.first) {
      std::cout << "    " << w << '\n';
    }
    if (!in_time) {
      std::cout << "    over the time limit\n";
    }
    return ok;
  }

  template <typename B>
  EpsilonData<typename B::Element> epsilons(B const& S) {
    auto es = is_epsilon_strong(S);
    if (!es.data) {
      throw std::runtime_error("not epsilon-strong: " + es.verdict.detail);
    }
    return *es.data;
  }

  std::string text(LeavittAlgebra const& L, LpaElement const& x) { return L.render(x); }

  void dade6_criterion(Check& c) {
    auto      D = dade6();
    ScBackend S(D.ring);
    auto      rep = analyze(S);
    c(rep.epsilon_strong.is_yes(), "epsilon-strong should be Yes");
    c(rep.strong.is_no(), "strongly graded should be No");
    c(rep.crossed.is_no(), "epsilon-crossed should be No");
    c(rep.crossed_per_g.size() == 2 && rep.crossed_per_g[1].kind == CrossedResult<RingElement>::Kind::Absent
          && rep.crossed_per_g[1].pairs_checked == 81 * 81,
      "crossed search in S_1 x S_1 should be exhaustive over 81x81 with no pair");
    Matrix3 four{}, three{};
    for (int k = 0; k < 3; ++k) {
      four[k][k]  = 4;
      three[k][k] = 3;
    }
    c(rep.epsilon && D.entries((*rep.epsilon)[1]) == four, "eps_1 should be diag(4,4,4)");

    auto dec = peel(S, *rep.epsilon);
    c(dec.success && dec.summands.size() == 1, "one strongly graded summand");
    if (dec.success && dec.summands.size() == 1) {
      c(D.entries(dec.summands[0].idempotent) == four, "summand idempotent diag(4,4,4)");
      c(dec.summands[0].N == S.group().all(), "summand subgroup Z/2");
      c(dec.remainder && D.entries(*dec.remainder) == three, "remainder diag(3,3,3)");
      c(dec.remainder_kind == RemainderKind::TrivialGradation, "remainder trivially graded");
    }
  }

  void lpa4_criterion(Check& c) {
    auto       L = lpa_z4();
    LpaBackend S(L);
    auto       eps = epsilons(S);
    c(text(L, eps[0]) == "v1+v2+v3+v4", "eps_0 = v1+v2+v3+v4");
    c(text(L, eps[2]) == "v1+v2+v3", "eps_2 = v1+v2+v3");
    for (GroupElement g : {1u, 3u}) {
      auto gens = S.component_generators(g);
      c(gens.complete && gens.elements.empty(), "S_" + std::to_string(g) + " = 0");
      c(eps[g].is_zero(), "eps_" + std::to_string(g) + " = 0");
    }
    c(N_of(S, eps, eps[2], true) == ElementSet{0, 2}, "N(eps_2) = {0,2}");
    auto dec = peel(S, eps);
    c(dec.success && dec.summands.size() == 1, "one summand");
    if (dec.success && dec.summands.size() == 1) {
      c(text(L, dec.summands[0].idempotent) == "v1+v2+v3", "summand v1+v2+v3");
      c(dec.summands[0].N == ElementSet{0, 2}, "summand subgroup {0,2}");
      c(dec.remainder && *dec.remainder == L.vertex(3), "remainder v4");
      c(dec.remainder_kind == RemainderKind::TrivialGradation, "remainder trivially graded");
    }
  }

  void lpa8_criterion(Check& c) {
    auto       L = lpa_z8();
    LpaBackend S(L);
    auto       eps = epsilons(S);
    c(text(L, eps[2]) == "v2+v3", "eps_2 = v2+v3");
    c(text(L, eps[4]) == "v1+v2+v3", "eps_4 = v1+v2+v3");
    c(text(L, eps[6]) == "v2+v3", "eps_6 = v2+v3");
    for (GroupElement g = 1; g < 8; g += 2) {
      c(eps[g].is_zero() && L.component_support(g).empty(), "odd component " + std::to_string(g) + " zero");
    }
    auto dec = peel(S, eps);
    c(dec.success, "peel succeeds");
    c(dec.rounds.size() == 2, "two rounds");
    for (std::size_t k = 1; k < dec.rounds.size(); ++k) {
      c(dec.rounds[k].semigroup.size() < dec.rounds[k - 1].semigroup.size(), "|B(E)| strictly decreases");
    }
    c(dec.summands.size() == 2, "two strongly graded summands");
    if (dec.summands.size() == 2) {
      c(text(L, dec.summands[0].idempotent) == "v2+v3" && dec.summands[0].N == ElementSet{0, 2, 4, 6},
        "first summand (v2+v3, <2>)");
      c(dec.summands[1].idempotent == L.vertex(0) && dec.summands[1].N == ElementSet{0, 4},
        "second summand (v1, <4>)");
    }
    c(dec.remainder && *dec.remainder == L.vertex(3), "remainder v4");
    c(dec.remainder_kind == RemainderKind::TrivialGradation, "v4 S trivially graded");
  }

  template <typename B>
  void theorem_instances(Check& c, B const& S, std::string const& name, std::size_t cap) {
    auto const& G   = S.group();
    auto        eps = epsilons(S);
    auto        sg  = boolean_semigroup(S, eps);
    for (GroupElement g = 0; g < G.order(); ++g) {
      auto const gi = G.inv(g);
      for (GroupElement h = 0; h < G.order(); ++h) {
        c(gamma_apply(S, eps, g, S.mul(eps[h], eps[gi])) == S.mul(eps[G.op(g, h)], eps[g]),
          name + ": idempotent identity fails at g=" + G.name(g) + " h=" + G.name(h));
      }
      bool component_zero = false;
      if constexpr (B::enumerable) {
        component_zero = S.ring().component_basis(g).empty();
      } else {
        component_zero = S.algebra().component_support(g).empty();
      }
      c(S.is_zero(eps[g]) == component_zero, name + ": eps_g = 0 iff S_g = 0 fails at g=" + G.name(g));
    }
    for (auto const& r : central_candidates(S, sg, cap)) {
      for (GroupElement g = 0; g < G.order(); ++g) {
        for (auto const& s : S.component_generators(g).elements) {
          c(S.mul(gamma_apply(S, eps, g, r), s) == S.mul(s, r), name + ": gamma_g(r) s = s r fails");
        }
      }
    }
    for (auto i : sg.minimal) {
      try {
        auto st = epsilon_central_status(S, sg, eps, i);
        c(st.gamma_invariant == st.central && st.central == st.subgroup, name + ": three-way disagreement");
      } catch (TheoremViolation const& e) {
        c(false, name + ": " + e.what());
      }
    }
  }

  void theorem_criterion(Check& c) {
    CoeffRing z2({2}), z3({3}), z6({6});
    auto      D = dade6();
    std::vector<std::pair<std::string, StructureConstantRing>> rings = {
        {"dade6", D.ring},
        {"group-ring Z2[C2]", group_ring_fixture(z2, cyclic_group(2))},
        {"group-ring Z3[C3]", group_ring_fixture(z3, cyclic_group(3))},
        {"trivial Z6/C2", trivial_fixture(z6, cyclic_group(2))},
        {"trivial Z2/C4", trivial_fixture(z2, cyclic_group(4))}};
    for (auto const& [name, ring] : rings) {
      theorem_instances(c, ScBackend(ring), name, kDefaultClosureCap);
    }
    for (auto const& [name, L] : std::vector<std::pair<std::string, LeavittAlgebra>>{{"lpa-z4", lpa_z4()},
                                                                                    {"lpa-z8", lpa_z8()}}) {
      theorem_instances(c, LpaBackend(L), name, 1u << 10);
    }

    // (rS_g)(rS_h) = rS_gh exhaustively on the DADE6 minimal elements
    ScBackend S(D.ring);
    auto      eps = epsilons(S);
    auto      sg  = boolean_semigroup(S, eps);
    for (auto i : sg.minimal) {
      auto N = N_of(S, sg, eps, i);
      c(verify_strong_summand(S, sg.elements[i], N).is_yes(), "dade6: corner of a minimal element not strong");
    }

    std::vector<GradedModule> mods = {regular_module(D.ring), column_module(D, {false, false, true}, {0, 0, 1}),
                                      column_module(D, {true, true, false}, {1, 1, 0}), zero_module(D.ring)};
    for (std::size_t k = 0; k < mods.size(); ++k) {
      try {
        c(dade_condition(mods[k], Verdict::yes()).is_yes(), "dade6 module " + std::to_string(k));
      } catch (TheoremViolation const& e) {
        c(false, "dade6 module " + std::to_string(k) + ": " + e.what());
      }
    }
  }

  void rewriting_criterion(Check& c) {
    std::mt19937 rng(2026);
    for (auto const& L : {lpa_z4(), lpa_z8()}) {
      auto const& G = L.graph();
      for (std::size_t v = 0; v < G.vertex_count(); ++v) {
        for (std::size_t w = 0; w < G.vertex_count(); ++w) {
          c(L.sub(L.multiply(L.vertex(v), L.vertex(w)), v == w ? L.vertex(v) : L.zero()).is_zero(), "vv' relation");
        }
        if (!G.is_sink(v)) {
          auto sum = L.zero();
          for (auto e : G.out_edges(v)) {
            sum = L.add(sum, L.multiply(L.edge(e), L.ghost(e)));
          }
          c(L.sub(L.vertex(v), sum).is_zero(), "CK2 at " + G.vertex_name(v));
        }
      }
      for (std::size_t e = 0; e < G.edge_count(); ++e) {
        auto const s = G.edge(e).source, r = G.edge(e).range;
        c(L.sub(L.multiply(L.vertex(s), L.edge(e)), L.edge(e)).is_zero(), "s(e) e = e");
        c(L.sub(L.multiply(L.edge(e), L.vertex(r)), L.edge(e)).is_zero(), "e r(e) = e");
        c(L.sub(L.multiply(L.vertex(r), L.ghost(e)), L.ghost(e)).is_zero(), "r(e) e* = e*");
        c(L.sub(L.multiply(L.ghost(e), L.vertex(s)), L.ghost(e)).is_zero(), "e* s(e) = e*");
        for (std::size_t f = 0; f < G.edge_count(); ++f) {
          c(L.sub(L.multiply(L.ghost(e), L.edge(f)), e == f ? L.vertex(r) : L.zero()).is_zero(), "CK1");
        }
      }

      std::vector<Monomial> pool;
      for (GroupElement g = 0; g < L.group().order(); ++g) {
        auto list = L.monomials_of_degree(g, 3);
        pool.insert(pool.end(), list.monomials.begin(), list.monomials.end());
      }
      std::uniform_int_distribution<std::size_t>   pick(0, pool.size() - 1), count(0, 3);
      std::uniform_int_distribution<std::uint64_t> coeff(1, L.coeff().size() - 1);
      auto random_element = [&] {
        auto x = L.zero();
        for (auto k = count(rng); k > 0; --k) {
          x = L.add(x, L.scale(Scalar{coeff(rng)}, L.monomial(pool[pick(rng)])));
        }
        return x;
      };
      for (int trial = 0; trial < 1000; ++trial) {
        auto a = random_element(), b = random_element(), d = random_element();
        c(L.multiply(L.multiply(a, b), d) == L.multiply(a, L.multiply(b, d)), "associativity");
      }
      for (int trial = 0; trial < 1000; ++trial) {
        auto const& m1 = pool[pick(rng)];
        auto const& m2 = pool[pick(rng)];
        auto        dg = L.group().op(L.degree_of(m1), L.degree_of(m2));
        auto const  prod = L.monomial_multiply(m1, m2);
        for (auto const& [m, k] : prod.terms()) {
          c(L.degree_of(m) == dg, "degree additivity");
        }
      }
    }
  }

  void oracle_criterion(Check& c) {
    CoeffRing z2({2}), z3({3}), z4({4}), z6({6});
    auto      D = dade6();
    for (auto const& ring : {D.ring, group_ring_fixture(z2, cyclic_group(2)), group_ring_fixture(z3, cyclic_group(3)),
                             trivial_fixture(z6, cyclic_group(2)), trivial_fixture(z2, cyclic_group(4)),
                             nilpotent_fixture(z4)}) {
      ScBackend   S(ring);
      auto const& G  = S.group();
      auto        es = is_epsilon_strong(S);
      if (!es.data) {
        continue;
      }
      bool shortcut = true;
      for (auto const& e : es.data->entries) {
        shortcut = shortcut && e.epsilon == S.one();
      }
      bool exhaustive = true;
      for (GroupElement g = 0; g < G.order(); ++g) {
        for (GroupElement h = 0; h < G.order(); ++h) {
          auto lhs   = component_product(ring, g, h);
          auto rhs   = span_of(ring, ring.component_elements(G.op(g, h)));
          exhaustive = exhaustive && module_equal(lhs, rhs);
        }
      }
      c(shortcut == exhaustive, "strong-grading shortcut disagrees with S_gS_h = S_gh");
    }

    auto       L = lpa_z4();
    LpaBackend S(L);
    auto       eps    = epsilons(S);
    auto       search = epsilon_crossed_witness(S, eps, 2);
    auto       obstr  = crossed_obstruction(S, eps, 2);
    c(search.kind == CrossedResult<LpaElement>::Kind::Absent, "LPA4 exhaustive search should find no pair");
    c(obstr.is_yes(), "LPA4 obstruction should be established");
  }

  void determinism_criterion(Check& c) {
    auto call = [](std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int                code = cli::run(args, out, err);
      return std::to_string(code) + "\n" + out.str();
    };
    auto dir = std::filesystem::current_path() / "acceptance_fixtures";
    std::filesystem::create_directories(dir);
    auto file = [&](std::string const& name, std::string const& body) {
      auto          p = (dir / name).string();
      std::ofstream f(p, std::ios::binary);
      f << body;
      return p;
    };
    std::vector<std::string> rings;
    for (auto const& name : io::example_names()) {
      auto emitted = call({"examples", name});
      c(emitted == call({"examples", name}), "examples " + name);
      if (name != "column") {
        rings.push_back(file(name + ".json", emitted.substr(emitted.find('\n') + 1)));
      }
    }
    for (auto const& name : {"dade6", "lpa-z4", "lpa-z8", "group-ring", "trivial"}) {
      rings.push_back(file(std::string("fixture-") + name + ".json",
                           std::string(R"({"kind":"fixture","name":")") + name + "\"}"));
    }
    for (auto const& ring : rings) {
      for (std::string cmd : {"analyze", "epsilon", "decompose"}) {
        c(call({cmd, ring, "--json"}) == call({cmd, ring, "--json"}), cmd + " " + ring);
      }
    }
    auto col  = call({"examples", "column"});
    auto colf = file("column.json", col.substr(col.find('\n') + 1));
    auto reg  = file("regular.json", R"({"kind":"fixture","name":"regular"})");
    for (auto const& m : {colf, reg}) {
      c(call({"module", rings.front(), m, "--json"}) == call({"module", rings.front(), m, "--json"}), "module " + m);
    }
  }
}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "DADE6 classification, eps_1 and decomposition", 10, dade6_criterion);
  ok &= run_criterion(2, "Leavitt Z/4 epsilons, N(eps_2) and decomposition", 5, lpa4_criterion);
  ok &= run_criterion(3, "Leavitt Z/8 two-round peel", 5, lpa8_criterion);
  ok &= run_criterion(4, "theorem instances on every fixture", 0, theorem_criterion);
  ok &= run_criterion(5, "rewriting relations, associativity, degree additivity", 30, rewriting_criterion);
  ok &= run_criterion(6, "oracle cross-checks", 0, oracle_criterion);
  ok &= run_criterion(7, "CLI determinism", 0, determinism_criterion);
  return ok ? 0 : 1;
}
