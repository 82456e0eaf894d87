#include "grady/coeff_vector.hpp"

#include <sstream>
#include <stdexcept>

namespace grady {

  CoeffSpace::CoeffSpace(CoeffRing                               coeff,
                         std::vector<std::vector<std::uint32_t>> orders)
      : _coeff(std::move(coeff)), _orders(std::move(orders)) {
    for (auto const& o : _orders) {
      if (o.size() != _coeff.components()) {
        throw std::invalid_argument("torsion order tuple has wrong length");
      }
      for (std::size_t k = 0; k < o.size(); ++k) {
        if (o[k] == 0 || _coeff.moduli()[k] % o[k] != 0) {
          throw std::invalid_argument("torsion order must divide the modulus");
        }
      }
    }
  }

  CoeffSpace::CoeffSpace(CoeffRing coeff, std::size_t n)
      : CoeffSpace(coeff, std::vector<std::vector<std::uint32_t>>(
                              n, coeff.moduli())) {}

  std::uint64_t CoeffSpace::coordinate_size(std::size_t i) const {
    std::uint64_t n = 1;
    for (auto o : _orders[i]) {
      n *= o;
    }
    return n;
  }

  CoeffVector CoeffSpace::unit(std::size_t i) const {
    auto v = zero();
    v[i]   = canonical(i, _coeff.one());
    return v;
  }

  CoeffVector CoeffSpace::from_sparse(SparseVector const& sv) const {
    auto v = zero();
    for (auto const& [i, c] : sv) {
      if (i >= dimension()) {
        throw std::invalid_argument("sparse vector index out of range");
      }
      v[i] = canonical(i, _coeff.add(v[i], c));
    }
    return v;
  }

  SparseVector CoeffSpace::to_sparse(CoeffVector const& v) const {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].code != 0) {
        out.emplace_back(i, v[i]);
      }
    }
    return out;
  }

  CoeffVector CoeffSpace::add(CoeffVector const& a, CoeffVector const& b) const {
    CoeffVector out(dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = canonical(i, _coeff.add(a[i], b[i]));
    }
    return out;
  }

  CoeffVector CoeffSpace::sub(CoeffVector const& a, CoeffVector const& b) const {
    CoeffVector out(dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = canonical(i, _coeff.sub(a[i], b[i]));
    }
    return out;
  }

  CoeffVector CoeffSpace::neg(CoeffVector const& a) const {
    CoeffVector out(dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = canonical(i, _coeff.neg(a[i]));
    }
    return out;
  }

  CoeffVector CoeffSpace::scale(Scalar c, CoeffVector const& a) const {
    CoeffVector out(dimension());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = canonical(i, _coeff.mul(c, a[i]));
    }
    return out;
  }

  void CoeffSpace::axpy(CoeffVector& acc, Scalar c, SparseVector const& v) const {
    for (auto const& [i, s] : v) {
      acc[i] = canonical(i, _coeff.add(acc[i], _coeff.mul(c, s)));
    }
  }

  std::string CoeffSpace::render(CoeffVector const&              v,
                                 std::vector<std::string> const& names) const {
    std::ostringstream os;
    bool               first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].code == 0) {
        continue;
      }
      if (!first) {
        os << '+';
      }
      first = false;
      if (v[i] != _coeff.one()) {
        os << _coeff.to_string(v[i]) << '*';
      }
      os << names[i];
    }
    if (first) {
      os << '0';
    }
    return os.str();
  }

}  // namespace grady
