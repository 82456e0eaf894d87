#include "grady/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "grady/sc_fixtures.hpp"

namespace grady::io {

  namespace {
    std::string at(std::string const& where, std::string const& key) { return where + "/" + key; }
    std::string at(std::string const& where, std::size_t k) { return where + "/" + std::to_string(k); }

    json const& field(json const& obj, char const* key, std::string const& where) {
      if (!obj.is_object()) {
        throw ParseError(where, "expected an object");
      }
      auto it = obj.find(key);
      if (it == obj.end()) {
        throw ParseError(where, std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    json const* optional_field(json const& obj, char const* key) {
      auto it = obj.find(key);
      return it == obj.end() ? nullptr : &*it;
    }

    json const& array(json const& j, std::string const& where) {
      if (!j.is_array()) {
        throw ParseError(where, "expected an array");
      }
      return j;
    }

    std::int64_t integer(json const& j, std::string const& where) {
      if (!j.is_number_integer()) {
        throw ParseError(where, "expected an integer");
      }
      return j.get<std::int64_t>();
    }

    std::uint64_t natural(json const& j, std::string const& where) {
      auto n = integer(j, where);
      if (n < 0) {
        throw ParseError(where, "expected a non-negative integer");
      }
      return static_cast<std::uint64_t>(n);
    }

    std::string text(json const& j, std::string const& where) {
      if (!j.is_string()) {
        throw ParseError(where, "expected a string");
      }
      return j.get<std::string>();
    }

    GroupElement group_index(json const& j, FiniteGroup const& G, std::string const& where) {
      auto g = natural(j, where);
      if (g >= G.order()) {
        throw ParseError(where, "group index " + std::to_string(g) + " out of range");
      }
      return static_cast<GroupElement>(g);
    }

    std::vector<std::string> names(json const& j, std::string const& where) {
      std::vector<std::string> out;
      for (std::size_t k = 0; k < array(j, where).size(); ++k) {
        out.push_back(text(j[k], at(where, k)));
      }
      return out;
    }

    Scalar scalar(json const& j, CoeffRing const& R, std::string const& where) {
      if (j.is_number_integer()) {
        return R.from_integer(j.get<std::int64_t>());
      }
      auto const& a = array(j, where);
      if (a.size() != R.components()) {
        throw ParseError(where, "expected " + std::to_string(R.components()) + " residues");
      }
      std::vector<std::int64_t> rs;
      for (std::size_t k = 0; k < a.size(); ++k) {
        rs.push_back(integer(a[k], at(where, k)));
      }
      return R.from_residues(rs);
    }

    SparseVector sparse(json const& j, CoeffRing const& R, std::size_t dim, std::string const& where) {
      if (!j.is_object()) {
        throw ParseError(where, "expected a sparse vector object");
      }
      std::map<std::size_t, Scalar> terms;
      for (auto const& [key, value] : j.items()) {
        std::size_t idx = 0;
        try {
          std::size_t used = 0;
          idx              = std::stoul(key, &used);
          if (used != key.size()) {
            throw std::invalid_argument(key);
          }
        } catch (std::exception const&) {
          throw ParseError(at(where, key), "key is not a basis index");
        }
        if (idx >= dim) {
          throw ParseError(at(where, key), "basis index out of range");
        }
        terms[idx] = R.add(terms[idx], scalar(value, R, at(where, key)));
      }
      SparseVector out;
      for (auto const& [i, c] : terms) {
        if (!R.is_zero(c)) {
          out.emplace_back(i, c);
        }
      }
      return out;
    }

    std::vector<std::vector<std::uint32_t>> torsion(json const* j, CoeffRing const& R, std::size_t dim,
                                                    std::string const& where) {
      std::vector<std::vector<std::uint32_t>> out;
      if (!j) {
        return out;
      }
      if (array(*j, where).size() != dim) {
        throw ParseError(where, "expected one entry per basis element");
      }
      for (std::size_t k = 0; k < dim; ++k) {
        auto const& e = array((*j)[k], at(where, k));
        if (!e.empty() && e.size() != R.components()) {
          throw ParseError(at(where, k), "expected [] or one order per coefficient component");
        }
        std::vector<std::uint32_t> orders;
        for (std::size_t c = 0; c < e.size(); ++c) {
          orders.push_back(static_cast<std::uint32_t>(natural(e[c], at(at(where, k), c))));
        }
        out.push_back(std::move(orders));
      }
      // all-free means free
      if (std::all_of(out.begin(), out.end(), [](auto const& v) { return v.empty(); })) {
        out.clear();
      } else {
        for (std::size_t k = 0; k < dim; ++k) {
          if (out[k].empty()) {
            out[k] = R.moduli();
          }
        }
      }
      return out;
    }

    template <typename F>
    auto guarded(std::string const& where, F&& f) {
      try {
        return f();
      } catch (std::invalid_argument const& e) {
        throw ParseError(where, e.what());
      }
    }

    std::vector<GroupElement> degrees(json const& j, FiniteGroup const& G, std::string const& where) {
      std::vector<GroupElement> out;
      for (std::size_t k = 0; k < array(j, where).size(); ++k) {
        out.push_back(group_index(j[k], G, at(where, k)));
      }
      return out;
    }

    StructureConstantRing parse_structure_constants(json const& doc) {
      auto G     = parse_group(field(doc, "group", ""), "/group");
      auto R     = parse_coeff(field(doc, "coeff", ""), "/coeff");
      auto basis = names(field(doc, "basis", ""), "/basis");
      auto degs  = degrees(field(doc, "degrees", ""), G, "/degrees");
      if (degs.size() != basis.size()) {
        throw ParseError("/degrees", "expected one degree per basis element");
      }
      auto const n = basis.size();
      ScRingSpec spec{R, G, basis, degs, torsion(optional_field(doc, "torsion"), R, n, "/torsion"),
                      sparse(field(doc, "one", ""), R, n, "/one"), {}};
      auto const& table = array(field(doc, "table", ""), "/table");
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t k = 0; k < table.size(); ++k) {
        auto const where = at("/table", k);
        auto i = natural(field(table[k], "i", where), at(where, "i"));
        auto j = natural(field(table[k], "j", where), at(where, "j"));
        if (i >= n || j >= n) {
          throw ParseError(where, "basis index out of range");
        }
        if (!seen.insert({i, j}).second) {
          throw ParseError(where, "duplicate product entry");
        }
        spec.table.push_back({i, j, sparse(field(table[k], "value", where), R, n, at(where, "value"))});
      }
      return StructureConstantRing::build(std::move(spec));
    }

    LeavittAlgebra parse_leavitt(json const& doc) {
      auto G        = parse_group(field(doc, "group", ""), "/group");
      auto R        = parse_coeff(field(doc, "coeff", ""), "/coeff");
      auto vertices = names(field(doc, "vertices", ""), "/vertices");
      std::map<std::string, std::size_t> index;
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        index.emplace(vertices[v], v);
      }
      auto vertex = [&](json const& j, std::string const& where) {
        auto it = index.find(text(j, where));
        if (it == index.end()) {
          throw ParseError(where, "unknown vertex \"" + j.get<std::string>() + "\"");
        }
        return it->second;
      };
      std::vector<Edge> edges;
      auto const&       es = array(field(doc, "edges", ""), "/edges");
      for (std::size_t k = 0; k < es.size(); ++k) {
        auto const where = at("/edges", k);
        edges.push_back({text(field(es[k], "id", where), at(where, "id")),
                         vertex(field(es[k], "src", where), at(where, "src")),
                         vertex(field(es[k], "dst", where), at(where, "dst")),
                         group_index(field(es[k], "weight", where), G, at(where, "weight"))});
      }
      auto graph = guarded("/edges", [&] { return DirectedGraph(vertices, edges); });
      return LeavittAlgebra(std::move(graph), std::move(G), std::move(R));
    }

    FiniteGroup group_or(json const& doc, FiniteGroup fallback) {
      auto const* g = optional_field(doc, "group");
      return g ? parse_group(*g, "/group") : std::move(fallback);
    }

    CoeffRing coeff_or(json const& doc, std::vector<std::uint32_t> fallback) {
      auto const* c = optional_field(doc, "coeff");
      return c ? parse_coeff(*c, "/coeff") : CoeffRing(std::move(fallback));
    }

    RingInput parse_fixture(json const& doc) {
      auto      name = text(field(doc, "name", ""), "/name");
      RingInput in;
      in.source = name;
      if (name == "dade6") {
        in.sc = dade6().ring;
      } else if (name == "lpa-z4") {
        in.lpa = lpa_z4(coeff_or(doc, {2}));
      } else if (name == "lpa-z8") {
        in.lpa = lpa_z8(coeff_or(doc, {2}));
      } else if (name == "group-ring") {
        in.sc = group_ring_fixture(coeff_or(doc, {2}), group_or(doc, cyclic_group(3)));
      } else if (name == "trivial") {
        in.sc = trivial_fixture(coeff_or(doc, {6}), group_or(doc, cyclic_group(2)));
      } else {
        throw ParseError("/name", "unknown fixture \"" + name + "\"");
      }
      return in;
    }

    json action_entries(GradedModule const& M) {
      json out = json::array();
      for (auto const& e : M.spec().action) {
        if (e.value.empty()) {
          continue;
        }
        out.push_back({{"i", e.i}, {"j", e.j}, {"value", sparse_json(M.space(), M.space().from_sparse(e.value))}});
      }
      return out;
    }

    json torsion_json(std::vector<std::vector<std::uint32_t>> const& t) {
      json out = json::array();
      for (auto const& orders : t) {
        out.push_back(orders);
      }
      return out;
    }
  }  // namespace

  json parse_text(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
    }
  }

  FiniteGroup parse_group(json const& j, std::string const& where) {
    auto type = text(field(j, "type", where), at(where, "type"));
    if (type == "cyclic") {
      auto n = natural(field(j, "n", where), at(where, "n"));
      if (n == 0 || n > 4096) {
        throw ParseError(at(where, "n"), "cyclic order must be between 1 and 4096");
      }
      return cyclic_group(static_cast<std::uint32_t>(n));
    }
    if (type == "table") {
      auto const&                            rows = array(field(j, "table", where), at(where, "table"));
      std::vector<std::vector<GroupElement>> table;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto const&               row = array(rows[r], at(at(where, "table"), r));
        std::vector<GroupElement> out;
        for (std::size_t c = 0; c < row.size(); ++c) {
          out.push_back(static_cast<GroupElement>(natural(row[c], at(at(at(where, "table"), r), c))));
        }
        table.push_back(std::move(out));
      }
      std::vector<std::string> labels;
      if (auto const* n = optional_field(j, "names")) {
        labels = names(*n, at(where, "names"));
      }
      return guarded(where, [&] { return FiniteGroup(std::move(table), std::move(labels)); });
    }
    throw ParseError(at(where, "type"), "unknown group type \"" + type + "\"");
  }

  CoeffRing parse_coeff(json const& j, std::string const& where) {
    auto const&                ms = array(field(j, "moduli", where), at(where, "moduli"));
    std::vector<std::uint32_t> moduli;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      auto m = natural(ms[k], at(at(where, "moduli"), k));
      if (m > 0xffffffffu) {
        throw ParseError(at(at(where, "moduli"), k), "modulus too large");
      }
      moduli.push_back(static_cast<std::uint32_t>(m));
    }
    return guarded(at(where, "moduli"), [&] { return CoeffRing(std::move(moduli)); });
  }

  RingInput parse_ring(json const& doc) {
    RingInput in;
    in.source = text(field(doc, "kind", ""), "/kind");
    if (in.source == "structure_constants") {
      in.sc = parse_structure_constants(doc);
    } else if (in.source == "leavitt") {
      in.lpa = parse_leavitt(doc);
    } else if (in.source == "fixture") {
      return parse_fixture(doc);
    } else {
      throw ParseError("/kind", "unknown ring kind \"" + in.source + "\"");
    }
    return in;
  }

  GradedModule parse_module(StructureConstantRing const& ring, json const& doc) {
    auto kind = text(field(doc, "kind", ""), "/kind");
    if (kind == "fixture") {
      auto name = text(field(doc, "name", ""), "/name");
      if (name == "regular") {
        return regular_module(ring);
      }
      if (name == "zero") {
        return zero_module(ring);
      }
      throw ParseError("/name", "unknown module fixture \"" + name + "\"");
    }
    if (kind != "module") {
      throw ParseError("/kind", "unknown module kind \"" + kind + "\"");
    }
    auto const& G     = ring.group();
    auto const& R     = ring.coeff();
    auto        basis = names(field(doc, "basis", ""), "/basis");
    auto        degs  = degrees(field(doc, "degrees", ""), G, "/degrees");
    if (degs.size() != basis.size()) {
      throw ParseError("/degrees", "expected one degree per basis element");
    }
    auto const n = basis.size();
    ModuleSpec spec{basis, degs, torsion(optional_field(doc, "torsion"), R, n, "/torsion"), {}};
    auto const& action = array(field(doc, "action", ""), "/action");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < action.size(); ++k) {
      auto const where = at("/action", k);
      auto i = natural(field(action[k], "i", where), at(where, "i"));
      auto j = natural(field(action[k], "j", where), at(where, "j"));
      if (i >= ring.basis_size() || j >= n) {
        throw ParseError(where, "index out of range");
      }
      if (!seen.insert({i, j}).second) {
        throw ParseError(where, "duplicate action entry");
      }
      spec.action.push_back({i, j, sparse(field(action[k], "value", where), R, n, at(where, "value"))});
    }
    return GradedModule::build(ring, std::move(spec));
  }

  json group_json(FiniteGroup const& G) {
    if (G.cyclic_order() != 0) {
      return {{"type", "cyclic"}, {"n", G.cyclic_order()}};
    }
    std::vector<std::string> labels;
    for (GroupElement g = 0; g < G.order(); ++g) {
      labels.push_back(G.name(g));
    }
    return {{"type", "table"}, {"table", G.table()}, {"names", labels}};
  }

  json sparse_json(CoeffSpace const& space, CoeffVector const& v) {
    json out = json::object();
    for (auto const& [i, c] : space.to_sparse(v)) {
      out[std::to_string(i)] = space.coeff().residues(c);
    }
    return out;
  }

  json ring_json(StructureConstantRing const& ring) {
    auto const& spec  = ring.spec();
    auto const& space = ring.space();
    json        table = json::array();
    for (std::size_t i = 0; i < ring.basis_size(); ++i) {
      for (std::size_t j = 0; j < ring.basis_size(); ++j) {
        auto const& v = ring.basis_product(i, j);
        if (!v.empty()) {
          table.push_back({{"i", i}, {"j", j}, {"value", sparse_json(space, space.from_sparse(v))}});
        }
      }
    }
    json out = {{"kind", "structure_constants"},
                {"group", group_json(ring.group())},
                {"coeff", {{"moduli", ring.coeff().moduli()}}},
                {"basis", spec.basis_names},
                {"degrees", spec.degrees},
                {"one", sparse_json(space, ring.one())},
                {"table", table}};
    if (!spec.torsion.empty()) {
      out["torsion"] = torsion_json(spec.torsion);
    }
    return out;
  }

  json leavitt_json(LeavittAlgebra const& L) {
    auto const& graph = L.graph();
    json        edges = json::array();
    for (auto const& e : graph.edges()) {
      edges.push_back({{"id", e.id},
                       {"src", graph.vertex_name(e.source)},
                       {"dst", graph.vertex_name(e.range)},
                       {"weight", e.weight}});
    }
    return {{"kind", "leavitt"},
            {"group", group_json(L.group())},
            {"coeff", {{"moduli", L.coeff().moduli()}}},
            {"vertices", graph.vertices()},
            {"edges", edges}};
  }

  json module_json(GradedModule const& M) {
    auto const& spec = M.spec();
    json        out  = {{"kind", "module"},
                        {"basis", spec.basis_names},
                        {"degrees", spec.degrees},
                        {"action", action_entries(M)}};
    if (!spec.torsion.empty()) {
      out["torsion"] = torsion_json(spec.torsion);
    }
    return out;
  }

  std::vector<std::string> example_names() {
    return {"column", "dade6", "group-ring", "halting", "lpa-z4", "lpa-z8", "nilpotent", "trivial"};
  }

  json example(std::string const& name) {
    if (name == "dade6") {
      return ring_json(dade6().ring);
    }
    if (name == "lpa-z4") {
      return leavitt_json(lpa_z4());
    }
    if (name == "lpa-z8") {
      return leavitt_json(lpa_z8());
    }
    if (name == "group-ring") {
      return ring_json(group_ring_fixture(CoeffRing({2}), cyclic_group(3)));
    }
    if (name == "trivial") {
      return ring_json(trivial_fixture(CoeffRing({6}), cyclic_group(2)));
    }
    if (name == "nilpotent") {
      return ring_json(nilpotent_fixture(CoeffRing({4})));
    }
    if (name == "halting") {
      // the minimal element v has N(v) = {0, 1}, not a subgroup of Z/3
      return leavitt_json(LeavittAlgebra(DirectedGraph({"v", "w"}, {{"f", 0, 1, 1}}), cyclic_group(3), CoeffRing({2})));
    }
    if (name == "column") {
      return module_json(column_module(dade6(), {false, false, true}, {0, 0, 1}));
    }
    throw ParseError("", "unknown example \"" + name + "\"");
  }

}  // namespace grady::io
