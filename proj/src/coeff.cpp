#include "grady/coeff.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grady {

  CoeffRing::CoeffRing(std::vector<std::uint32_t> moduli)
      : _moduli(std::move(moduli)), _size(1) {
    if (_moduli.empty()) {
      throw std::invalid_argument("coefficient ring needs at least one modulus");
    }
    for (auto m : _moduli) {
      if (m < 2) {
        throw std::invalid_argument("every modulus must be at least 2");
      }
      _radix.push_back(_size);
      _size *= m;
      if (_size >= (std::uint64_t{1} << 32)) {
        throw std::invalid_argument("coefficient ring too large");
      }
    }
    std::vector<std::int64_t> ones(_moduli.size(), 1);
    _one = from_residues(ones);
  }

  std::vector<std::uint32_t> CoeffRing::residues(Scalar a) const {
    std::vector<std::uint32_t> out(_moduli.size());
    auto                       code = a.code;
    for (std::size_t k = 0; k < _moduli.size(); ++k) {
      out[k] = static_cast<std::uint32_t>(code % _moduli[k]);
      code /= _moduli[k];
    }
    return out;
  }

  Scalar CoeffRing::from_residues(std::span<std::int64_t const> residues) const {
    if (residues.size() != _moduli.size()) {
      throw std::invalid_argument("residue tuple has wrong length");
    }
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < _moduli.size(); ++k) {
      auto m = static_cast<std::int64_t>(_moduli[k]);
      auto r = ((residues[k] % m) + m) % m;
      code += static_cast<std::uint64_t>(r) * _radix[k];
    }
    return Scalar{code};
  }

  Scalar CoeffRing::from_integer(std::int64_t n) const {
    std::vector<std::int64_t> r(_moduli.size(), n);
    return from_residues(r);
  }

  namespace {
    template <typename Op>
    Scalar componentwise(std::vector<std::uint32_t> const& moduli,
                         Scalar                            a,
                         Scalar                            b,
                         Op                                op) {
      if (moduli.size() == 1) {
        return Scalar{op(a.code, b.code) % moduli[0]};
      }
      std::uint64_t code  = 0;
      std::uint64_t radix = 1;
      auto          ca    = a.code;
      auto          cb    = b.code;
      for (auto m : moduli) {
        code += (op(ca % m, cb % m) % m) * radix;
        ca /= m;
        cb /= m;
        radix *= m;
      }
      return Scalar{code};
    }
  }  // namespace

  Scalar CoeffRing::add(Scalar a, Scalar b) const {
    return componentwise(
        _moduli, a, b, [](std::uint64_t x, std::uint64_t y) {
          return x + y;
        });
  }

  Scalar CoeffRing::mul(Scalar a, Scalar b) const {
    return componentwise(
        _moduli, a, b, [](std::uint64_t x, std::uint64_t y) {
          return x * y;
        });
  }

  Scalar CoeffRing::neg(Scalar a) const {
    std::uint64_t code = 0;
    auto          c    = a.code;
    for (std::size_t k = 0; k < _moduli.size(); ++k) {
      auto m = _moduli[k];
      code += ((m - c % m) % m) * _radix[k];
      c /= m;
    }
    return Scalar{code};
  }

  Scalar CoeffRing::sub(Scalar a, Scalar b) const {
    return add(a, neg(b));
  }

  bool CoeffRing::is_unit(Scalar a) const {
    auto r = residues(a);
    for (std::size_t k = 0; k < _moduli.size(); ++k) {
      if (std::gcd(r[k], _moduli[k]) != 1) {
        return false;
      }
    }
    return true;
  }

  Scalar CoeffRing::reduce(Scalar a, std::span<std::uint32_t const> orders) const {
    std::uint64_t code = 0;
    auto          c    = a.code;
    for (std::size_t k = 0; k < _moduli.size(); ++k) {
      auto m = _moduli[k];
      code += ((c % m) % orders[k]) * _radix[k];
      c /= m;
    }
    return Scalar{code};
  }

  std::vector<std::uint32_t> CoeffRing::additive_orders(Scalar a) const {
    auto r = residues(a);
    for (std::size_t k = 0; k < _moduli.size(); ++k) {
      r[k] = _moduli[k] / std::gcd(r[k], _moduli[k]);
    }
    return r;
  }

  std::vector<Scalar> CoeffRing::elements() const {
    std::vector<Scalar> out;
    out.reserve(_size);
    for (std::uint64_t c = 0; c < _size; ++c) {
      out.push_back(Scalar{c});
    }
    return out;
  }

  std::string CoeffRing::to_string(Scalar a) const {
    auto r = residues(a);
    if (r.size() == 1) {
      return std::to_string(r[0]);
    }
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < r.size(); ++k) {
      os << (k ? "," : "") << r[k];
    }
    os << ')';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal
  ////////////////////////////////////////////////////////////////////////

  Ideal Ideal::generated_by(CoeffRing const&        ambient,
                            std::span<Scalar const> generators) {
    std::set<Scalar> members{ambient.zero()};
    auto const       all = ambient.elements();
    for (auto g : generators) {
      // Adding the principal ideal (g) keeps the set an ideal.
      std::set<Scalar> next;
      for (auto m : members) {
        for (auto a : all) {
          next.insert(ambient.add(m, ambient.mul(a, g)));
        }
      }
      members = std::move(next);
    }
    return Ideal(ambient, {members.begin(), members.end()});
  }

  bool Ideal::contains(Scalar a) const {
    return std::binary_search(_members.begin(), _members.end(), a);
  }

  Scalar Ideal::principal_generator() const {
    auto const all = _ambient.elements();
    for (auto u : _members) {
      std::set<Scalar> span;
      for (auto a : all) {
        span.insert(_ambient.mul(a, u));
      }
      if (span.size() == _members.size()) {
        return u;
      }
    }
    // Unreachable for products of Z/m.
    throw std::logic_error("ideal has no single generator");
  }

  std::optional<Scalar> ideal_identity(Ideal const& ideal) {
    auto const&           ring = ideal.ambient();
    std::optional<Scalar> found;
    for (auto u : ideal.members()) {
      bool ok = std::all_of(
          ideal.members().begin(), ideal.members().end(), [&](Scalar x) {
            return ring.mul(u, x) == x;
          });
      if (ok) {
        if (found) {
          throw std::logic_error("ideal has two identities");
        }
        found = u;
      }
    }
    return found;
  }

}  // namespace grady
