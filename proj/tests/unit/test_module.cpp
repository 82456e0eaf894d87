#include <doctest.h>

#include <random>

#include "grady/module.hpp"
#include "oracle.hpp"

using namespace grady;

namespace {
  using Col = std::array<std::int64_t, 3>;

  // Integer column of a module element over a matrix fixture.
  Col column_of(MatrixFixture const& F, std::array<bool, 3> ideal_rows, ModuleElement const& m) {
    Col out{};
    auto const& R = F.ring.coeff();
    for (std::size_t r = 0; r < 3; ++r) {
      auto x = ideal_rows[r] ? R.mul(m[r], F.generator) : m[r];
      out[r] = R.residues(x)[0];
    }
    return out;
  }

  Col mat_vec(oracle::Mat3 const& a, Col const& v) {
    Col out{};
    for (int i = 0; i < 3; ++i) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k) {
        s += a[i][k] * v[k];
      }
      out[i] = s % 6;
    }
    return out;
  }

  ModuleSpec column_spec(MatrixFixture const& F) {
    return column_module(F, {false, false, true}, {0, 0, 1}).spec();
  }

  ValidationError::Kind build_error(MatrixFixture const& F, ModuleSpec spec) {
    try {
      GradedModule::build(F.ring, std::move(spec));
    } catch (ValidationError const& e) {
      return e.kind();
    }
    FAIL("module built");
    return ValidationError::Kind::Malformed;
  }
}  // namespace

TEST_CASE("module fixtures build") {
  auto D   = dade6();
  auto reg = regular_module(D.ring);
  CHECK(reg.cardinality() == D.ring.cardinality());
  auto col = column_module(D, {false, false, true}, {0, 0, 1});
  CHECK(col.cardinality() == 6 * 6 * 3);
  auto col3 = column_module(D, {true, true, false}, {1, 1, 0});
  CHECK(col3.cardinality() == 3 * 3 * 6);
  auto zero = zero_module(D.ring);
  CHECK(zero.cardinality() == 1);

  // the action is matrix times column
  std::mt19937                                rng(7);
  std::uniform_int_distribution<std::int64_t> d6(0, 5), d3(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Mat3 a{};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        a[r][c] = is_ideal_position(r, c) ? 2 * d3(rng) : d6(rng);
      }
    }
    auto m = col.zero();
    for (std::size_t k = 0; k < 3; ++k) {
      m[k] = col.space().canonical(k, D.ring.coeff().from_integer(d6(rng)));
    }
    auto x = D.element(a);
    CHECK(column_of(D, {false, false, true}, col.act(x, m))
          == mat_vec(a, column_of(D, {false, false, true}, m)));
  }
}

TEST_CASE("module validation errors") {
  auto D = dade6();

  auto bad_grading = column_spec(D);
  for (auto& e : bad_grading.action) {
    if (e.i == 0 && e.j == 0) {
      e.value = {{2, D.ring.coeff().one()}};
    }
  }
  CHECK(build_error(D, bad_grading) == ValidationError::Kind::Grading);

  auto no_identity = column_spec(D);
  std::erase_if(no_identity.action, [](auto const& e) { return e.i == 0; });
  CHECK(build_error(D, no_identity) == ValidationError::Kind::IdentityAction);

  // E12 c2 = 2 c1 breaks (E12 E21) c1 = E12 (E21 c1)
  auto bad_assoc = column_spec(D);
  for (auto& e : bad_assoc.action) {
    if (e.i == 1 && e.j == 1) {
      e.value = {{0, D.ring.coeff().from_integer(2)}};
    }
  }
  CHECK(build_error(D, bad_assoc) == ValidationError::Kind::ActionAssociativity);

  auto out_of_range = column_spec(D);
  out_of_range.action.push_back({99, 0, {}});
  CHECK(build_error(D, out_of_range) == ValidationError::Kind::Malformed);

  auto torsion = column_spec(D);
  torsion.torsion[2] = {2};
  CHECK(build_error(D, torsion) == ValidationError::Kind::Torsion);
}

TEST_CASE("S(M)") {
  auto D   = dade6();
  auto reg = regular_module(D.ring);
  auto sm  = S_of(reg);
  REQUIRE(sm.components.size() == 2);
  CHECK(sm.components[1].same_members(component_span(reg, 1)));
  CHECK(sm.components[1].size() == 81);
  CHECK(sm.components[0].same_members(component_span(reg, 0)));
  CHECK(same_sets(S_of(reg, sm), sm));

  auto col = column_module(D, {false, false, true}, {0, 0, 1});
  auto sc  = S_of(col);
  CHECK(same_sets(S_of(col, sc), sc));

  auto T  = trivial_fixture(CoeffRing({6}), cyclic_group(2));
  auto sh = shifted_trivial_module(T, 1);
  auto st = S_of(sh);
  CHECK(st.components[0].same_members(component_span(sh, 0)));
  CHECK(st.components[1].size() == 1);

  auto z  = zero_module(D.ring);
  auto sz = S_of(z);
  for (auto const& c : sz.components) {
    CHECK(c.size() == 1);
  }
}

TEST_CASE("symmetric modules and the Dade condition") {
  auto D  = dade6();
  auto es = Verdict::yes();
  std::vector<GradedModule> mods = {regular_module(D.ring), column_module(D, {false, false, true}, {0, 0, 1}),
                                    column_module(D, {true, true, false}, {1, 1, 0}), zero_module(D.ring)};
  for (auto const& M : mods) {
    CHECK(dade_condition(M, es).is_yes());
    CHECK(is_epsilon_strong_module(M).is_yes());
  }
  CHECK(is_symmetric_module(mods[0]).is_yes());
  CHECK(is_symmetric_module(mods[3]).is_yes());

  auto T  = trivial_fixture(CoeffRing({6}), cyclic_group(2));
  auto sh = shifted_trivial_module(T, 1);
  auto sv = is_symmetric_module(sh);
  CHECK(sv.is_no());
  CHECK(sv.detail.find("g=1") != std::string::npos);

  auto N   = nilpotent_fixture(CoeffRing({4}));
  auto reg = regular_module(N);
  auto nv  = is_epsilon_strong_module(reg);
  CHECK(nv.is_no());
  CHECK(nv.detail.find("(g,h)=(1,") != std::string::npos);
  CHECK(dade_condition(reg, Verdict::no()).is_no());
  CHECK_THROWS_AS(dade_condition(reg, Verdict::yes()), TheoremViolation);
}
