#include "grady/lpa.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace grady {

  ////////////////////////////////////////////////////////////////////////
  // DirectedGraph
  ////////////////////////////////////////////////////////////////////////

  DirectedGraph::DirectedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : _vertices(std::move(vertices)), _edges(std::move(edges)) {
    std::set<std::string> names;
    for (auto const& v : _vertices) {
      if (v.empty() || !names.insert(v).second) {
        throw std::invalid_argument("duplicate or empty vertex name '" + v + "'");
      }
    }
    for (auto const& e : _edges) {
      if (e.id.empty() || e.id.back() == '*' || !names.insert(e.id).second) {
        throw std::invalid_argument("bad or duplicate edge id '" + e.id + "'");
      }
      if (e.source >= _vertices.size() || e.range >= _vertices.size()) {
        throw std::invalid_argument("edge '" + e.id + "' has a dangling endpoint");
      }
    }
    _out.assign(_vertices.size(), {});
    for (std::size_t e = 0; e < _edges.size(); ++e) {
      _out[_edges[e].source].push_back(e);
    }
    for (auto& list : _out) {
      std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        return _edges[a].id < _edges[b].id;
      });
    }
  }

  std::optional<std::size_t> DirectedGraph::special_edge(std::size_t v) const {
    if (_out[v].empty()) {
      return std::nullopt;
    }
    return _out[v].front();
  }

  std::optional<std::size_t> DirectedGraph::vertex_index(std::string const& name) const {
    auto it = std::find(_vertices.begin(), _vertices.end(), name);
    if (it == _vertices.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _vertices.begin());
  }

  std::optional<std::size_t> DirectedGraph::edge_index(std::string const& name) const {
    for (std::size_t e = 0; e < _edges.size(); ++e) {
      if (_edges[e].id == name) {
        return e;
      }
    }
    return std::nullopt;
  }

  namespace {
    // Topological order, or nothing when there is a cycle.
    std::optional<std::vector<std::size_t>> topological(DirectedGraph const& G) {
      std::vector<std::size_t> indeg(G.vertex_count(), 0);
      for (auto const& e : G.edges()) {
        ++indeg[e.range];
      }
      std::vector<std::size_t> order;
      std::deque<std::size_t>  ready;
      for (std::size_t v = 0; v < G.vertex_count(); ++v) {
        if (indeg[v] == 0) {
          ready.push_back(v);
        }
      }
      while (!ready.empty()) {
        auto v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (auto e : G.out_edges(v)) {
          if (--indeg[G.edge(e).range] == 0) {
            ready.push_back(G.edge(e).range);
          }
        }
      }
      if (order.size() != G.vertex_count()) {
        return std::nullopt;
      }
      return order;
    }
  }  // namespace

  bool DirectedGraph::is_acyclic() const {
    return topological(*this).has_value();
  }

  std::size_t DirectedGraph::longest_path() const {
    auto order = topological(*this);
    if (!order) {
      throw std::logic_error("longest path of a graph with a cycle");
    }
    std::vector<std::size_t> best(vertex_count(), 0);
    std::size_t              top = 0;
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
      for (auto e : _out[*it]) {
        best[*it] = std::max(best[*it], best[_edges[e].range] + 1);
      }
      top = std::max(top, best[*it]);
    }
    return top;
  }

  ////////////////////////////////////////////////////////////////////////
  // LeavittAlgebra
  ////////////////////////////////////////////////////////////////////////

  LeavittAlgebra::LeavittAlgebra(DirectedGraph graph, FiniteGroup group, CoeffRing coeff)
      : _graph(std::move(graph)), _group(std::move(group)), _coeff(std::move(coeff)) {
    auto const n = _graph.vertex_count();
    if (n == 0) {
      throw std::invalid_argument("graph has no vertices");
    }
    _short_names = true;
    for (auto const& e : _graph.edges()) {
      if (e.weight >= _group.order()) {
        throw std::invalid_argument("weight of edge '" + e.id + "' is not a group element");
      }
      _short_names = _short_names && e.id.size() == 1;
    }

    _path_degrees.assign(n * n, {});
    for (std::size_t v = 0; v < n; ++v) {
      _path_degrees[v * n + v].insert(_group.identity());
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (auto const& f : _graph.edges()) {
        for (std::size_t w = 0; w < n; ++w) {
          for (auto d : ElementSet(_path_degrees[f.range * n + w])) {
            changed |= _path_degrees[f.source * n + w].insert(_group.op(f.weight, d)).second;
          }
        }
      }
    }
  }

  LpaElement LeavittAlgebra::one() const {
    LpaElement::Terms t;
    for (std::size_t v = 0; v < _graph.vertex_count(); ++v) {
      t.emplace(Monomial{{}, {}, v}, _coeff.one());
    }
    return LpaElement(std::move(t));
  }

  LpaElement LeavittAlgebra::vertex(std::size_t v) const {
    return normal_form(Monomial{{}, {}, v});
  }

  LpaElement LeavittAlgebra::edge(std::size_t e) const {
    return normal_form(Monomial{{e}, {}, _graph.edge(e).range});
  }

  LpaElement LeavittAlgebra::ghost(std::size_t e) const {
    return normal_form(Monomial{{}, {e}, _graph.edge(e).range});
  }

  void LeavittAlgebra::accumulate(LpaElement::Terms& acc, Monomial const& m, Scalar c) const {
    auto [it, fresh] = acc.emplace(m, c);
    if (!fresh) {
      it->second = _coeff.add(it->second, c);
    }
    if (_coeff.is_zero(it->second)) {
      acc.erase(it);
    }
  }

  void LeavittAlgebra::reduce_into(LpaElement::Terms& acc, Monomial m, Scalar c) const {
    if (_coeff.is_zero(c)) {
      return;
    }
    if (!m.alpha.empty() && !m.beta.empty() && m.alpha.back() == m.beta.back()) {
      auto const e = m.alpha.back();
      auto const u = _graph.edge(e).source;
      if (_graph.special_edge(u) == e) {
        m.alpha.pop_back();
        m.beta.pop_back();
        for (auto f : _graph.out_edges(u)) {
          if (f == e) {
            continue;
          }
          Monomial other{m.alpha, m.beta, _graph.edge(f).range};
          other.alpha.push_back(f);
          other.beta.push_back(f);
          reduce_into(acc, std::move(other), _coeff.neg(c));
        }
        m.vertex = u;
        reduce_into(acc, std::move(m), c);
        return;
      }
    }
    accumulate(acc, m, c);
  }

  bool LeavittAlgebra::is_valid(Monomial const& m) const {
    if (m.vertex >= _graph.vertex_count()) {
      return false;
    }
    auto path_ok = [&](std::vector<std::size_t> const& p) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] >= _graph.edge_count()) {
          return false;
        }
        if (k > 0 && _graph.edge(p[k - 1]).range != _graph.edge(p[k]).source) {
          return false;
        }
      }
      return p.empty() || _graph.edge(p.back()).range == m.vertex;
    };
    return path_ok(m.alpha) && path_ok(m.beta);
  }

  bool LeavittAlgebra::is_canonical(Monomial const& m) const {
    if (!is_valid(m)) {
      return false;
    }
    if (m.alpha.empty() || m.beta.empty() || m.alpha.back() != m.beta.back()) {
      return true;
    }
    auto const e = m.alpha.back();
    return _graph.special_edge(_graph.edge(e).source) != e;
  }

  LpaElement LeavittAlgebra::normal_form(Monomial const& m) const {
    if (!is_valid(m)) {
      return {};
    }
    LpaElement::Terms acc;
    reduce_into(acc, m, _coeff.one());
    return LpaElement(std::move(acc));
  }

  namespace {
    bool is_prefix(std::vector<std::size_t> const& p, std::vector<std::size_t> const& q) {
      return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
    }
  }  // namespace

  LpaElement LeavittAlgebra::monomial_multiply(Monomial const& a, Monomial const& b) const {
    if (!is_valid(a) || !is_valid(b) || target(a) != source(b)) {
      return {};
    }
    Monomial out;
    if (is_prefix(a.beta, b.alpha)) {
      out.alpha = a.alpha;
      out.alpha.insert(out.alpha.end(), b.alpha.begin() + a.beta.size(), b.alpha.end());
      out.beta   = b.beta;
      out.vertex = b.vertex;
    } else if (is_prefix(b.alpha, a.beta)) {
      out.alpha = a.alpha;
      out.beta  = b.beta;
      out.beta.insert(out.beta.end(), a.beta.begin() + b.alpha.size(), a.beta.end());
      out.vertex = a.vertex;
    } else {
      return {};
    }
    return normal_form(out);
  }

  LpaElement LeavittAlgebra::add(LpaElement const& a, LpaElement const& b) const {
    auto acc = a.terms();
    for (auto const& [m, c] : b.terms()) {
      accumulate(acc, m, c);
    }
    return LpaElement(std::move(acc));
  }

  LpaElement LeavittAlgebra::sub(LpaElement const& a, LpaElement const& b) const {
    return add(a, neg(b));
  }

  LpaElement LeavittAlgebra::neg(LpaElement const& a) const {
    LpaElement::Terms acc;
    for (auto const& [m, c] : a.terms()) {
      accumulate(acc, m, _coeff.neg(c));
    }
    return LpaElement(std::move(acc));
  }

  LpaElement LeavittAlgebra::scale(Scalar k, LpaElement const& a) const {
    LpaElement::Terms acc;
    for (auto const& [m, c] : a.terms()) {
      accumulate(acc, m, _coeff.mul(k, c));
    }
    return LpaElement(std::move(acc));
  }

  LpaElement LeavittAlgebra::multiply(LpaElement const& a, LpaElement const& b) const {
    LpaElement::Terms acc;
    for (auto const& [ma, ca] : a.terms()) {
      for (auto const& [mb, cb] : b.terms()) {
        auto const c = _coeff.mul(ca, cb);
        if (_coeff.is_zero(c)) {
          continue;
        }
        auto const prod = monomial_multiply(ma, mb);
        for (auto const& [m, k] : prod.terms()) {
          accumulate(acc, m, _coeff.mul(c, k));
        }
      }
    }
    return LpaElement(std::move(acc));
  }

  LpaElement LeavittAlgebra::star(LpaElement const& a) const {
    LpaElement::Terms acc;
    for (auto const& [m, c] : a.terms()) {
      accumulate(acc, Monomial{m.beta, m.alpha, m.vertex}, c);
    }
    return LpaElement(std::move(acc));
  }

  Letter LeavittAlgebra::parse_letter(std::string const& token) const {
    if (!token.empty() && token.back() == '*') {
      if (auto e = _graph.edge_index(token.substr(0, token.size() - 1))) {
        return {Letter::Kind::Ghost, *e};
      }
    } else if (auto v = _graph.vertex_index(token)) {
      return {Letter::Kind::Vertex, *v};
    } else if (auto e = _graph.edge_index(token)) {
      return {Letter::Kind::Edge, *e};
    }
    throw std::invalid_argument("unknown letter '" + token + "'");
  }

  Word LeavittAlgebra::parse_word(std::string const& text) const {
    std::istringstream is(text);
    Word               out;
    for (std::string token; is >> token;) {
      out.push_back(parse_letter(token));
    }
    return out;
  }

  LpaElement LeavittAlgebra::normal_form(std::span<WordTerm const> raw) const {
    LpaElement acc;
    for (auto const& term : raw) {
      auto x = one();
      for (auto const& l : term.word) {
        switch (l.kind) {
          case Letter::Kind::Vertex: x = multiply(x, vertex(l.index)); break;
          case Letter::Kind::Edge: x = multiply(x, edge(l.index)); break;
          case Letter::Kind::Ghost: x = multiply(x, ghost(l.index)); break;
        }
      }
      acc = add(acc, scale(term.coeff, x));
    }
    return acc;
  }

  LpaElement LeavittAlgebra::word(std::string const& text) const {
    WordTerm t{_coeff.one(), parse_word(text)};
    return normal_form(std::span<WordTerm const>(&t, 1));
  }

  GroupElement LeavittAlgebra::path_weight(std::span<std::size_t const> path) const {
    auto w = _group.identity();
    for (auto e : path) {
      w = _group.op(w, _graph.edge(e).weight);
    }
    return w;
  }

  GroupElement LeavittAlgebra::degree_of(Monomial const& m) const {
    return _group.op(path_weight(m.alpha), _group.inv(path_weight(m.beta)));
  }

  std::size_t LeavittAlgebra::source(Monomial const& m) const {
    return m.alpha.empty() ? m.vertex : _graph.edge(m.alpha.front()).source;
  }

  std::size_t LeavittAlgebra::target(Monomial const& m) const {
    return m.beta.empty() ? m.vertex : _graph.edge(m.beta.front()).source;
  }

  bool LeavittAlgebra::is_homogeneous(LpaElement const& a, GroupElement g) const {
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [&](auto const& t) { return degree_of(t.first) == g; });
  }

  std::set<std::size_t> LeavittAlgebra::component_support(GroupElement g) const {
    auto const            n = _graph.vertex_count();
    std::vector<ElementSet> into(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = 0; w < n; ++w) {
        into[w].insert(path_degrees(u, w).begin(), path_degrees(u, w).end());
      }
    }
    std::set<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n && !out.contains(v); ++w) {
        for (auto d1 : path_degrees(v, w)) {
          for (auto d2 : into[w]) {
            if (_group.op(d1, _group.inv(d2)) == g) {
              out.insert(v);
            }
          }
        }
      }
    }
    return out;
  }

  MonomialList LeavittAlgebra::monomials_of_degree(GroupElement g, std::size_t len_bound,
                                                   std::size_t max_count) const {
    auto const n       = _graph.vertex_count();
    bool const nonzero = !component_support(g).empty();
    if (!nonzero) {
      return {{}, true};
    }
    using Path = std::vector<std::size_t>;
    // paths[w][k]: paths of length k ending at w
    std::vector<std::vector<std::vector<Path>>> paths(n);
    bool        truncated = false;
    std::size_t total     = n;
    for (std::size_t w = 0; w < n; ++w) {
      paths[w].push_back({Path{}});
    }
    for (std::size_t k = 1; k <= len_bound && !truncated; ++k) {
      for (std::size_t w = 0; w < n && !truncated; ++w) {
        std::vector<Path> next;
        for (auto const& p : paths[w][k - 1]) {
          auto const start = p.empty() ? w : _graph.edge(p.front()).source;
          for (std::size_t f = 0; f < _graph.edge_count(); ++f) {
            if (_graph.edge(f).range != start) {
              continue;
            }
            Path q{f};
            q.insert(q.end(), p.begin(), p.end());
            next.push_back(std::move(q));
            if (++total > max_count) {
              truncated = true;
            }
          }
        }
        paths[w].push_back(std::move(next));
      }
    }

    std::vector<Monomial> out;
    for (std::size_t len = 0; len <= len_bound && !truncated; ++len) {
      for (std::size_t w = 0; w < n && !truncated; ++w) {
        for (std::size_t a = 0; a <= len; ++a) {
          auto const b = len - a;
          if (a >= paths[w].size() || b >= paths[w].size()) {
            continue;
          }
          for (auto const& alpha : paths[w][a]) {
            for (auto const& beta : paths[w][b]) {
              Monomial m{alpha, beta, w};
              if (is_canonical(m) && degree_of(m) == g) {
                out.push_back(std::move(m));
                if (out.size() >= max_count) {
                  truncated = true;
                }
              }
            }
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), [](Monomial const& x, Monomial const& y) {
      auto const lx = x.length(), ly = y.length();
      return std::tie(lx, x.alpha, x.beta, x.vertex) < std::tie(ly, y.alpha, y.beta, y.vertex);
    });
    bool const complete
        = !truncated && _graph.is_acyclic() && len_bound >= 2 * _graph.longest_path();
    return {std::move(out), complete};
  }

  std::optional<std::vector<std::size_t>> LeavittAlgebra::path_into(
      std::size_t w, GroupElement weight) const {
    using State = std::pair<std::size_t, GroupElement>;
    std::map<State, std::pair<std::size_t, State>> via;  // state -> (edge, successor)
    State const                                    start{w, _group.identity()};
    std::set<State>                                seen{start};
    std::deque<State>                              queue{start};
    while (!queue.empty()) {
      auto const s = queue.front();
      queue.pop_front();
      if (s.second == weight) {
        std::vector<std::size_t> path;
        for (auto cur = s; cur != start;) {
          auto const& [e, next] = via.at(cur);
          path.push_back(e);
          cur = next;
        }
        return path;
      }
      for (std::size_t f = 0; f < _graph.edge_count(); ++f) {
        auto const& E = _graph.edge(f);
        if (E.range != s.first) {
          continue;
        }
        State t{E.source, _group.op(E.weight, s.second)};
        if (seen.insert(t).second) {
          via.emplace(t, std::make_pair(f, s));
          queue.push_back(t);
        }
      }
    }
    return std::nullopt;
  }

  Ck2Factorization LeavittAlgebra::ck2_factorization(std::size_t v, GroupElement g,
                                                     std::size_t depth_bound) const {
    Ck2Factorization out{std::nullopt, depth_bound, {}};
    if (v >= _graph.vertex_count() || g >= _group.order()) {
      throw std::invalid_argument("vertex or degree out of range");
    }
    if (!component_support(g).contains(v)) {
      out.reason = "vertex is not in the support of the component";
      return out;
    }
    constexpr std::size_t kNodeCap = 4096;
    auto const            ginv     = _group.inv(g);

    // eager: stop as soon as a partner path no longer than alpha exists.
    auto attempt = [&](bool eager) -> std::optional<std::vector<Monomial>> {
      std::vector<Monomial> leaves;
      std::size_t           nodes = 0;
      std::function<bool(std::vector<std::size_t> const&)> visit
          = [&](std::vector<std::size_t> const& alpha) {
              if (++nodes > kNodeCap) {
                return false;
              }
              auto const w    = alpha.empty() ? v : _graph.edge(alpha.back()).range;
              auto const beta = path_into(w, _group.op(ginv, path_weight(alpha)));
              bool const last = _graph.is_sink(w) || alpha.size() >= depth_bound;
              if (beta && (last || !eager || beta->size() <= alpha.size())) {
                leaves.push_back(Monomial{alpha, *beta, w});
                return true;
              }
              if (last) {
                return false;
              }
              for (auto f : _graph.out_edges(w)) {
                auto next = alpha;
                next.push_back(f);
                if (!visit(next)) {
                  return false;
                }
              }
              return true;
            };
      if (!visit({})) {
        return std::nullopt;
      }
      return leaves;
    };

    auto leaves = attempt(true);
    if (!leaves) {
      leaves = attempt(false);
    }
    if (!leaves) {
      out.reason = "no factorization within depth " + std::to_string(depth_bound);
      return out;
    }
    std::vector<LpaElement> terms;
    auto                    sum = zero();
    for (auto const& m : *leaves) {
      auto x = normal_form(m);
      sum    = add(sum, multiply(x, star(x)));
      terms.push_back(std::move(x));
    }
    for (auto const& x : terms) {
      for (auto const& [m, c] : x.terms()) {
        if (degree_of(m) != g || source(m) != v) {
          out.reason = "expansion produced a term of the wrong shape";
          return out;
        }
      }
    }
    if (sum != vertex(v)) {
      out.reason = "expansion does not sum to the vertex";
      return out;
    }
    out.terms = std::move(terms);
    return out;
  }

  std::string LeavittAlgebra::render(Monomial const& m) const {
    if (m.alpha.empty() && m.beta.empty()) {
      return _graph.vertex_name(m.vertex);
    }
    std::vector<std::string> tokens;
    for (auto e : m.alpha) {
      tokens.push_back(_graph.edge(e).id);
    }
    for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it) {
      tokens.push_back(_graph.edge(*it).id + "*");
    }
    std::string out;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (k > 0 && !_short_names) {
        out += '.';
      }
      out += tokens[k];
    }
    return out;
  }

  std::string LeavittAlgebra::render(LpaElement const& a) const {
    if (a.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [m, c] : a.terms()) {
      if (!out.empty()) {
        out += '+';
      }
      if (c != _coeff.one()) {
        out += _coeff.to_string(c) + "*";
      }
      out += render(m);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  LeavittAlgebra lpa_z4(CoeffRing const& coeff) {
    DirectedGraph G({"v1", "v2", "v3", "v4"}, {{"f", 0, 1, 2}, {"g", 2, 1, 2}});
    return LeavittAlgebra(std::move(G), cyclic_group(4), coeff);
  }

  LeavittAlgebra lpa_z8(CoeffRing const& coeff) {
    DirectedGraph G({"v1", "v2", "v3", "v4"},
                    {{"h", 0, 0, 4}, {"f", 1, 2, 2}, {"g", 2, 1, 2}});
    return LeavittAlgebra(std::move(G), cyclic_group(8), coeff);
  }

}  // namespace grady
