#include "grady/decomposition.hpp"

namespace grady {

  char const* to_string(RemainderKind k) noexcept {
    switch (k) {
      case RemainderKind::Zero: return "Zero";
      case RemainderKind::TrivialGradation: return "TrivialGradation";
      case RemainderKind::EpsilonStrong: return "EpsilonStrong";
    }
    return "?";
  }

  namespace {
    std::uint64_t corner_size(ScBackend const& S, RingElement const& e) {
      auto const&              ring = S.ring();
      std::vector<RingElement> xs;
      for (std::size_t i = 0; i < ring.basis_size(); ++i) {
        xs.push_back(ring.multiply(e, ring.basis(i)));
      }
      return span_of(ring, xs, S.bounds().closure_cap).size();
    }
  }  // namespace

  bool reconstructs(ScBackend const& S, DecompositionReport<RingElement> const& rep) {
    std::uint64_t total = 1;
    for (auto const& s : rep.summands) {
      total *= corner_size(S, s.idempotent);
    }
    if (rep.remainder) {
      total *= corner_size(S, *rep.remainder);
    }
    return total == S.ring().cardinality();
  }

  std::vector<ModuleSummand> decompose_module(GradedModule const& M, DecompositionReport<RingElement> const& rep,
                                              std::size_t cap) {
    std::vector<ModuleSummand> out;
    auto const&                G = M.group();
    auto add = [&](RingElement const& e, ElementSet H, bool remainder) {
      ModuleSummand s{e, std::move(H), remainder, {}, Verdict::unverified()};
      for (GroupElement h = 0; h < G.order(); ++h) {
        auto xs = M.component_elements(h);
        for (auto& x : xs) {
          x = M.act(e, x);
        }
        s.sizes.push_back(MemberSet::enumerate(M.space(), std::span<ModuleElement const>(xs), cap).size());
      }
      s.verdict = corner_module_condition(M, e, s.H, cap);
      out.push_back(std::move(s));
    };
    for (auto const& s : rep.summands) {
      add(s.idempotent, s.N, false);
    }
    if (rep.remainder) {
      add(*rep.remainder, G.all(), true);
    }
    return out;
  }

}  // namespace grady
