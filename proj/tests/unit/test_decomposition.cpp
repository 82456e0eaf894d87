#include <doctest.h>

#include <set>

#include "grady/decomposition.hpp"
#include "oracle.hpp"

using namespace grady;

namespace {
  template <typename B>
  EpsilonData<typename B::Element> epsilons(B const& S) {
    auto es = is_epsilon_strong(S);
    REQUIRE(es.data);
    return *es.data;
  }

  // v -f-> w with f in degree 1 over Z/3: the minimal element v has
  // N = {0, 1}, which is not a subgroup.
  LeavittAlgebra halting_graph() {
    DirectedGraph g({"v", "w"}, {{"f", 0, 1, 1}});
    return LeavittAlgebra(std::move(g), cyclic_group(3), CoeffRing({2}));
  }

  // number of distinct values c*x mod n over the given x range
  std::size_t image_size(std::int64_t c, std::set<std::int64_t> const& xs, std::int64_t n) {
    std::set<std::int64_t> out;
    for (auto x : xs) {
      out.insert(c * x % n);
    }
    return out.size();
  }
}  // namespace

TEST_CASE("DADE6 splits into a strong corner and a trivial remainder") {
  auto      D = dade6();
  ScBackend S(D.ring);
  auto      eps = epsilons(S);
  auto      rep = peel(S, eps);
  REQUIRE(rep.success);
  REQUIRE(rep.rounds.size() == 1);
  REQUIRE(rep.summands.size() == 1);
  CHECK(D.entries(rep.summands[0].idempotent) == oracle::diag(4, 4, 4));
  CHECK(rep.summands[0].N == ElementSet{0, 1});
  REQUIRE(rep.remainder);
  CHECK(D.entries(*rep.remainder) == oracle::diag(3, 3, 3));
  CHECK(rep.remainder_kind == RemainderKind::TrivialGradation);

  // e + e' = 1 and e e' = 0 in plain integers
  auto e  = D.entries(rep.summands[0].idempotent);
  auto e2 = D.entries(*rep.remainder);
  CHECK(oracle::matadd(e, e2, 6) == oracle::diag(1, 1, 1));
  CHECK(oracle::matmul(e, e2, 6) == oracle::Mat3{});
  CHECK(oracle::matmul(e, e, 6) == e);

  CHECK(verify_strong_summand(S, rep.summands[0].idempotent, rep.summands[0].N).is_yes());
  // the whole ring is not strongly graded, but the corner is
  CHECK(verify_strong_summand(S, S.one(), S.group().all()).is_no());
}

TEST_CASE("DADE6 cardinality reconstruction") {
  auto      D = dade6();
  ScBackend S(D.ring);
  auto      rep = peel(S, epsilons(S));
  CHECK(reconstructs(S, rep));

  std::size_t ideal = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      ideal += is_ideal_position(r, c) ? 1 : 0;
    }
  }
  std::set<std::int64_t> full{0, 1, 2, 3, 4, 5}, b{0, 2, 4};
  std::uint64_t          corner = 1, rest = 1, whole = 1;
  for (std::size_t k = 0; k < 9; ++k) {
    auto const& xs = k < ideal ? b : full;
    corner *= image_size(4, xs, 6);
    rest *= image_size(3, xs, 6);
    whole *= xs.size();
  }
  CHECK(corner == 19683);
  CHECK(rest == 32);
  CHECK(corner * rest == whole);
  CHECK(whole == D.ring.cardinality());
}

TEST_CASE("Leavitt Z/4 decomposition") {
  auto       L = lpa_z4();
  LpaBackend S(L);
  auto       eps = epsilons(S);
  auto       rep = peel(S, eps);
  REQUIRE(rep.success);
  REQUIRE(rep.summands.size() == 1);
  CHECK(L.render(rep.summands[0].idempotent) == "v1+v2+v3");
  CHECK(rep.summands[0].N == ElementSet{0, 2});
  REQUIRE(rep.remainder);
  CHECK(*rep.remainder == L.vertex(3));
  CHECK(rep.remainder_kind == RemainderKind::TrivialGradation);
  CHECK(verify_strong_summand(S, eps, rep.summands[0].idempotent, rep.summands[0].N).is_yes());
}

TEST_CASE("Leavitt Z/8 needs two rounds") {
  auto       L = lpa_z8();
  LpaBackend S(L);
  auto       eps = epsilons(S);
  auto       rep = peel(S, eps);
  REQUIRE(rep.success);
  REQUIRE(rep.rounds.size() == 2);

  auto const& r0 = rep.rounds[0];
  CHECK(r0.semigroup.size() == 4);
  REQUIRE(r0.peeled.size() == 1);
  CHECK(L.render(r0.peeled[0].idempotent) == "v2+v3");
  CHECK(r0.peeled[0].N == ElementSet{0, 2, 4, 6});
  REQUIRE(r0.remainder);
  CHECK(L.render(*r0.remainder) == "v1+v4");
  CHECK(r0.remainder_kind == RemainderKind::EpsilonStrong);

  auto const& r1 = rep.rounds[1];
  CHECK(r1.semigroup.size() == 3);
  CHECK(r1.unit == *r0.remainder);
  REQUIRE(r1.peeled.size() == 1);
  CHECK(r1.peeled[0].idempotent == L.vertex(0));
  CHECK(r1.peeled[0].N == ElementSet{0, 4});
  REQUIRE(rep.remainder);
  CHECK(*rep.remainder == L.vertex(3));
  CHECK(rep.remainder_kind == RemainderKind::TrivialGradation);

  REQUIRE(rep.summands.size() == 2);
  for (auto const& s : rep.summands) {
    CHECK(verify_strong_summand(S, eps, s.idempotent, s.N).is_yes());
  }
  // summands and remainder add up to 1
  auto total = S.add(S.add(rep.summands[0].idempotent, rep.summands[1].idempotent), *rep.remainder);
  CHECK(total == L.one());
}

TEST_CASE("degenerate fixtures") {
  auto      T = trivial_fixture(CoeffRing({6}), cyclic_group(2));
  ScBackend ST(T);
  auto      rt = peel(ST, epsilons(ST));
  REQUIRE(rt.success);
  REQUIRE(rt.summands.size() == 1);
  CHECK(rt.summands[0].idempotent == ST.one());
  CHECK(rt.summands[0].N == ElementSet{0});
  CHECK(rt.remainder_kind == RemainderKind::Zero);

  auto      GR = group_ring_fixture(CoeffRing({2}), cyclic_group(3));
  ScBackend SG(GR);
  auto      eg = epsilons(SG);
  auto      rg = peel(SG, eg);
  REQUIRE(rg.success);
  REQUIRE(rg.summands.size() == 1);
  CHECK(rg.summands[0].idempotent == SG.one());
  CHECK(rg.summands[0].N == ElementSet{0, 1, 2});
  CHECK(rg.remainder_kind == RemainderKind::Zero);

  auto cr = crossed_decomposition(SG, eg, rg);
  REQUIRE(cr.size() == 1);
  CHECK(cr[0].verdict.is_yes());
}

TEST_CASE("non-central minimal element halts") {
  auto       L = halting_graph();
  LpaBackend S(L);
  auto       eps = epsilons(S);
  CHECK(eps[1] == L.vertex(0));
  CHECK(eps[2] == L.vertex(1));
  auto rep = peel(S, eps);
  CHECK_FALSE(rep.success);
  CHECK(rep.halted.find("v") != std::string::npos);
  REQUIRE(rep.rounds.size() == 1);
  auto const& r = rep.rounds[0];
  CHECK(r.peeled.empty());
  REQUIRE_FALSE(r.not_central.empty());
  for (std::size_t k = 0; k < r.semigroup.minimal.size(); ++k) {
    CHECK_FALSE(r.status[k].subgroup);
    CHECK_FALSE(r.status[k].central);
  }
  CHECK(r.status[0].N == ElementSet{0, 1});
}

TEST_CASE("corner epsilons") {
  auto       L = lpa_z8();
  LpaBackend S(L);
  auto       eps = epsilons(S);
  auto       u   = S.add(L.vertex(0), L.vertex(3));
  auto       c   = corner_epsilon(S, eps, u);
  CHECK(c[0] == u);
  CHECK(c[4] == L.vertex(0));
  for (GroupElement g : {1, 2, 3, 5, 6, 7}) {
    CHECK(c[g].is_zero());
  }
  for (auto const& entry : c.entries) {
    auto sum = S.zero();
    for (auto const& [a, b] : entry.factorization) {
      sum = S.add(sum, S.mul(a, b));
    }
    CHECK(sum == entry.epsilon);
  }
}

TEST_CASE("summands are not crossed products") {
  auto      D = dade6();
  ScBackend S(D.ring);
  auto      eps = epsilons(S);
  auto      cr  = crossed_decomposition(S, eps, peel(S, eps));
  REQUIRE(cr.size() == 1);
  CHECK(cr[0].verdict.is_no());
  REQUIRE(cr[0].results.size() == 2);
  CHECK(cr[0].results[0].kind == CrossedResult<RingElement>::Kind::Found);
  CHECK(cr[0].results[1].kind == CrossedResult<RingElement>::Kind::Absent);
  CHECK(cr[0].results[1].pairs_checked == 81u * 81u);

  auto       L  = lpa_z4();
  LpaBackend SL(L);
  auto       el = epsilons(SL);
  auto       cl = crossed_decomposition(SL, el, peel(SL, el));
  REQUIRE(cl.size() == 1);
  CHECK(cl[0].verdict.is_no());
  CHECK(cl[0].results[1].kind == CrossedResult<LpaElement>::Kind::Absent);
  CHECK(cl[0].results[1].pairs_checked >= 16u * 16u);
}

TEST_CASE("module decomposition") {
  auto      D = dade6();
  ScBackend S(D.ring);
  auto      rep = peel(S, epsilons(S));
  auto      col = column_module(D, {false, false, true}, {0, 0, 1});
  auto      ms  = decompose_module(col, rep);
  REQUIRE(ms.size() == 2);
  // 4 (Z6, Z6, B) = (B, B, B); 3 (Z6, Z6, B) = ({0,3}, {0,3}, 0)
  CHECK(ms[0].sizes == std::vector<std::uint64_t>{9, 3});
  CHECK(ms[0].verdict.is_yes());
  CHECK(ms[1].remainder);
  CHECK(ms[1].sizes == std::vector<std::uint64_t>{4, 1});
  CHECK(ms[1].verdict.is_yes());
  CHECK(ms[0].sizes[0] * ms[0].sizes[1] * ms[1].sizes[0] * ms[1].sizes[1] == col.cardinality());

  auto reg = regular_module(D.ring);
  for (auto const& s : decompose_module(reg, rep)) {
    CHECK(s.verdict.is_yes());
  }
}

namespace {
  template <typename B>
  void check_peel_invariants(B const& S) {
    auto const& G   = S.group();
    auto        eps = epsilons(S);
    auto        rep = peel(S, eps);
    REQUIRE(rep.success);
    auto sum = S.zero();
    for (std::size_t a = 0; a < rep.summands.size(); ++a) {
      auto const& e = rep.summands[a].idempotent;
      CHECK(S.mul(e, e) == e);
      for (std::size_t b = a + 1; b < rep.summands.size(); ++b) {
        CHECK(S.is_zero(S.mul(e, rep.summands[b].idempotent)));
      }
      CHECK(is_subgroup(G, rep.summands[a].N));
      if constexpr (B::enumerable) {
        CHECK(verify_strong_summand(S, e, rep.summands[a].N).is_yes());
      } else {
        CHECK(verify_strong_summand(S, eps, e, rep.summands[a].N).is_yes());
      }
      sum = S.add(sum, e);
    }
    REQUIRE(rep.remainder);
    CHECK(S.add(sum, *rep.remainder) == S.one());
    for (GroupElement g = 0; g < G.order(); ++g) {
      if (g != G.identity() && rep.remainder_kind != RemainderKind::EpsilonStrong) {
        CHECK(S.is_zero(S.mul(*rep.remainder, eps[g])));
      }
    }
    for (std::size_t k = 1; k < rep.rounds.size(); ++k) {
      CHECK(rep.rounds[k].semigroup.size() < rep.rounds[k - 1].semigroup.size());
    }
    if constexpr (B::enumerable) {
      CHECK(reconstructs(S, rep));
    }
  }
}  // namespace

TEST_CASE("peeling invariants on every epsilon-strong fixture") {
  CoeffRing z2({2}), z3({3}), z6({6});
  auto      D = dade6();
  std::vector<StructureConstantRing> rings = {D.ring,
                                              group_ring_fixture(z2, cyclic_group(2)),
                                              group_ring_fixture(z3, cyclic_group(3)),
                                              group_ring_fixture(CoeffRing({2, 3}), cyclic_group(2)),
                                              trivial_fixture(z6, cyclic_group(2)),
                                              trivial_fixture(z2, cyclic_group(4))};
  CoeffRing    z10({10});
  Scalar const gen = z10.from_integer(2);
  rings.push_back(triangular_matrix(z10, std::span<Scalar const>(&gen, 1)).ring);
  for (auto const& ring : rings) {
    check_peel_invariants(ScBackend(ring));
  }
  for (auto const& L : {lpa_z4(), lpa_z8(), lpa_z8(CoeffRing({3}))}) {
    check_peel_invariants(LpaBackend(L));
  }
}
