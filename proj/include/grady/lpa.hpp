#pragma once

// Leavitt path algebras of finite graphs with a standard grading by a finite
// group. Elements are kept in the canonical basis of monomials alpha beta^*
// that do not end in a pair (e, e^*) where e is the special edge of s(e).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "grady/coeff.hpp"
#include "grady/group.hpp"

namespace grady {

  struct Edge {
    std::string  id;
    std::size_t  source;
    std::size_t  range;
    GroupElement weight;
  };

  class DirectedGraph {
   public:
    // Throws std::invalid_argument on dangling endpoints or duplicate names.
    DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

    std::size_t        vertex_count() const noexcept { return _vertices.size(); }
    std::size_t        edge_count() const noexcept { return _edges.size(); }
    std::string const& vertex_name(std::size_t v) const { return _vertices[v]; }
    Edge const&        edge(std::size_t e) const { return _edges[e]; }
    std::vector<std::string> const& vertices() const noexcept { return _vertices; }
    std::vector<Edge> const&        edges() const noexcept { return _edges; }

    // Out-edges sorted by id.
    std::vector<std::size_t> const& out_edges(std::size_t v) const {
      return _out[v];
    }
    bool is_sink(std::size_t v) const { return _out[v].empty(); }

    // The out-edge with the lexicographically least id; absent for sinks.
    std::optional<std::size_t> special_edge(std::size_t v) const;

    std::optional<std::size_t> vertex_index(std::string const& name) const;
    std::optional<std::size_t> edge_index(std::string const& name) const;

    bool is_acyclic() const;
    // Length of the longest path; only meaningful when acyclic.
    std::size_t longest_path() const;

   private:
    std::vector<std::string>              _vertices;
    std::vector<Edge>                     _edges;
    std::vector<std::vector<std::size_t>> _out;
  };

  // alpha beta^* with r(alpha) = r(beta) = vertex. Paths are edge indices.
  struct Monomial {
    std::vector<std::size_t> alpha;
    std::vector<std::size_t> beta;
    std::size_t              vertex = 0;

    std::size_t length() const noexcept { return alpha.size() + beta.size(); }
    auto operator<=>(Monomial const&) const = default;
  };

  class LpaElement {
   public:
    using Terms = std::map<Monomial, Scalar>;

    LpaElement() = default;
    explicit LpaElement(Terms terms) : _terms(std::move(terms)) {}

    Terms const& terms() const noexcept { return _terms; }
    bool         is_zero() const noexcept { return _terms.empty(); }

    bool operator==(LpaElement const&) const = default;
    bool operator<(LpaElement const& other) const { return _terms < other._terms; }

   private:
    Terms _terms;
  };

  struct Letter {
    enum class Kind { Vertex, Edge, Ghost };
    Kind        kind;
    std::size_t index;
  };

  using Word = std::vector<Letter>;

  struct WordTerm {
    Scalar coeff;
    Word   word;
  };

  struct MonomialList {
    std::vector<Monomial> monomials;
    bool                  complete;
  };

  struct Ck2Factorization {
    // m_1..m_k of degree g with source v and sum m_i m_i^* = v.
    std::optional<std::vector<LpaElement>> terms;
    std::size_t                            depth_bound;
    std::string                            reason;  // set when terms is empty
  };

  class LeavittAlgebra {
   public:
    using Element = LpaElement;

    LeavittAlgebra(DirectedGraph graph, FiniteGroup group, CoeffRing coeff);

    DirectedGraph const& graph() const noexcept { return _graph; }
    FiniteGroup const&   group() const noexcept { return _group; }
    CoeffRing const&     coeff() const noexcept { return _coeff; }

    // 2 * |E^0| * |G|, the default search bound for paths and expansions.
    std::size_t default_bound() const noexcept {
      return 2 * _graph.vertex_count() * _group.order();
    }

    LpaElement zero() const { return {}; }
    LpaElement one() const;
    LpaElement vertex(std::size_t v) const;
    LpaElement edge(std::size_t e) const;
    LpaElement ghost(std::size_t e) const;
    LpaElement monomial(Monomial const& m) const { return normal_form(m); }

    LpaElement add(LpaElement const& a, LpaElement const& b) const;
    LpaElement sub(LpaElement const& a, LpaElement const& b) const;
    LpaElement neg(LpaElement const& a) const;
    LpaElement scale(Scalar c, LpaElement const& a) const;
    LpaElement multiply(LpaElement const& a, LpaElement const& b) const;
    // The involution alpha beta^* -> beta alpha^*, coefficients unchanged.
    LpaElement star(LpaElement const& a) const;

    bool is_valid(Monomial const& m) const;
    bool is_canonical(Monomial const& m) const;

    LpaElement normal_form(Monomial const& m) const;
    LpaElement normal_form(std::span<WordTerm const> raw) const;
    LpaElement monomial_multiply(Monomial const& a, Monomial const& b) const;

    // Letters by name: a vertex name, an edge id, or an edge id followed by
    // '*'. Words are whitespace separated.
    Letter parse_letter(std::string const& token) const;
    Word   parse_word(std::string const& text) const;
    LpaElement word(std::string const& text) const;

    GroupElement path_weight(std::span<std::size_t const> path) const;
    GroupElement degree_of(Monomial const& m) const;
    std::size_t  source(Monomial const& m) const;  // left end vertex
    std::size_t  target(Monomial const& m) const;  // right end vertex

    bool is_homogeneous(LpaElement const& a, GroupElement g) const;

    // P(v,w): degrees of all finite paths from v to w, as a least fixpoint.
    ElementSet const& path_degrees(std::size_t v, std::size_t w) const {
      return _path_degrees[v * _graph.vertex_count() + w];
    }

    // Vertices that are the source of some monomial of degree g.
    std::set<std::size_t> component_support(GroupElement g) const;

    // Canonical monomials of degree g with |alpha| + |beta| <= len_bound,
    // ordered by length. `complete` is true only when no canonical monomial
    // of degree g is longer than the bound (decided by acyclicity) or the
    // component is zero.
    MonomialList monomials_of_degree(GroupElement g, std::size_t len_bound,
                                     std::size_t max_count = 200'000) const;

    // A shortest path ending at w with the given weight, from any vertex.
    std::optional<std::vector<std::size_t>> path_into(std::size_t w,
                                                      GroupElement weight) const;

    Ck2Factorization ck2_factorization(std::size_t v, GroupElement g,
                                       std::size_t depth_bound) const;

    std::string render(Monomial const& m) const;
    std::string render(LpaElement const& a) const;

   private:
    void reduce_into(LpaElement::Terms& acc, Monomial m, Scalar c) const;
    void accumulate(LpaElement::Terms& acc, Monomial const& m, Scalar c) const;

    DirectedGraph           _graph;
    FiniteGroup             _group;
    CoeffRing               _coeff;
    std::vector<ElementSet> _path_degrees;
    bool                    _short_names;
  };

  // Built-in graphs, coefficients default to Z/2.
  //   lpa_z4: v1 -f-> v2 <-g- v3, isolated v4; weights f = g = 2 in Z/4.
  //   lpa_z8: loop h at v1 (weight 4), v2 -f-> v3 -g-> v2 (weights 2),
  //           isolated v4; graded by Z/8.
  LeavittAlgebra lpa_z4(CoeffRing const& coeff = CoeffRing({2}));
  LeavittAlgebra lpa_z8(CoeffRing const& coeff = CoeffRing({2}));

}  // namespace grady
