#include "grady/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grady/decomposition.hpp"
#include "grady/io.hpp"

namespace grady::cli {

  namespace {
    using io::json;

    struct Options {
      bool                     json = false;
      std::size_t              max_len = 0;
      std::size_t              max_depth = 0;
      std::size_t              closure_cap = kDefaultClosureCap;
      std::vector<std::string> files;
      std::string              example;
    };

    // Raised after a report has been produced, to set a non-zero exit.
    struct Stop {
      int         code;
      std::string message;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw io::ParseError(path, "cannot read file");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    ////////////////////////////////////////////////////////////////////////
    // report pieces
    ////////////////////////////////////////////////////////////////////////

    json element(ScBackend const& S, RingElement const& x) {
      return {{"sparse", io::sparse_json(S.ring().space(), x)}, {"text", S.render(x)}};
    }
    json element(LpaBackend const& S, LpaElement const& x) { return {{"text", S.render(x)}}; }

    json verdict(Verdict const& v) { return {{"verdict", to_string(v.kind)}, {"detail", v.detail}}; }

    json subset(FiniteGroup const& G, ElementSet const& s) {
      return {{"elements", std::vector<GroupElement>(s.begin(), s.end())}, {"text", to_string(G, s)}};
    }

    json bounds(Bounds const& b) {
      return {{"closure_cap", b.closure_cap}, {"max_depth", b.max_depth}, {"max_len", b.max_len}};
    }

    json legend(FiniteGroup const& G, bool leavitt) {
      std::vector<std::string> names;
      for (GroupElement g = 0; g < G.order(); ++g) {
        names.push_back(G.name(g));
      }
      return {{"group", {{"identity", G.identity()}, {"names", names}, {"order", G.order()}}},
              {"elements", leavitt ? "text is a sum of normal-form monomials; x* is the ghost of x"
                                   : "sparse maps basis index to coefficient residues; text uses basis names"},
              {"verdicts", "Yes | No | Unverified; detail names a witness or the bounds used"}};
    }

    template <typename B>
    json epsilon_table(B const& S, EpsilonData<typename B::Element> const& eps) {
      json out = json::array();
      for (auto const& e : eps.entries) {
        out.push_back({{"g", e.g},
                       {"zero", e.zero},
                       {"epsilon", element(S, e.epsilon)},
                       {"factorization_size", e.factorization.size()},
                       {"status", to_string(e.status)}});
      }
      return out;
    }

    template <typename B>
    json centrality(B const& S, BooleanSemigroup<typename B::Element> const& sg, std::size_t i,
                    CentralStatus const& st) {
      return {{"element", i},
              {"text", S.render(sg.elements[i])},
              {"N", subset(S.group(), st.N)},
              {"gamma_invariant", st.gamma_invariant},
              {"central", st.central},
              {"subgroup", st.subgroup},
              {"epsilon_central", st.epsilon_central()}};
    }

    template <typename B>
    json semigroup(B const& S, BooleanSemigroup<typename B::Element> const& sg,
                   EpsilonData<typename B::Element> const& eps) {
      json elements = json::array();
      for (std::size_t i = 0; i < sg.size(); ++i) {
        json e = {{"index", i}, {"label", sg.labels[i]}, {"element", element(S, sg.elements[i])},
                  {"minimal", sg.is_minimal(i)}};
        if (sg.zero != i) {
          e["N"] = subset(S.group(), N_of(S, sg, eps, i));
        }
        elements.push_back(std::move(e));
      }
      json central = json::array();
      for (auto i : sg.minimal) {
        central.push_back(centrality(S, sg, i, epsilon_central_status(S, sg, eps, i)));
      }
      return {{"elements", elements},
              {"product", sg.product},
              {"minimal", sg.minimal},
              {"zero", sg.zero ? json(*sg.zero) : json(nullptr)},
              {"size", sg.size()},
              {"nonzero_size", sg.nonzero_size()},
              {"centrality", central},
              {"note", "B* always lists 1_S = eps_e; a listing that omits it differs only by that element"}};
    }

    template <typename E>
    json summand(FiniteGroup const& G, auto const& S, Summand<E> const& s) {
      return {{"idempotent", element(S, s.idempotent)}, {"N", subset(G, s.N)}};
    }

    template <typename B>
    json decomposition(B const& S, EpsilonData<typename B::Element> const& eps,
                       DecompositionReport<typename B::Element> const& rep) {
      auto const& G      = S.group();
      json        rounds = json::array();
      for (std::size_t k = 0; k < rep.rounds.size(); ++k) {
        auto const& r = rep.rounds[k];
        json        listing = json::array();
        for (std::size_t i = 0; i < r.semigroup.size(); ++i) {
          listing.push_back({{"index", i}, {"label", r.semigroup.labels[i]},
                             {"element", element(S, r.semigroup.elements[i])}});
        }
        json central = json::array();
        for (std::size_t m = 0; m < r.semigroup.minimal.size(); ++m) {
          central.push_back(centrality(S, r.semigroup, r.semigroup.minimal[m], r.status[m]));
        }
        json peeled = json::array();
        for (auto const& s : r.peeled) {
          peeled.push_back(summand(G, S, s));
        }
        json round = {{"round", k},
                      {"unit", element(S, r.unit)},
                      {"B", listing},
                      {"B_size", r.semigroup.size()},
                      {"minimal", r.semigroup.minimal},
                      {"centrality", central},
                      {"peeled", peeled}};
        if (r.remainder) {
          round["remainder"] = {{"idempotent", element(S, *r.remainder)}, {"kind", to_string(r.remainder_kind)}};
        }
        rounds.push_back(std::move(round));
      }
      json out = {{"outcome", rep.success ? "Success" : "Halted"}, {"rounds", rounds}};
      if (!rep.success) {
        out["halted_reason"] = rep.halted;
        return out;
      }

      auto crossed  = crossed_decomposition(S, eps, rep);
      json summands = json::array();
      for (std::size_t k = 0; k < rep.summands.size(); ++k) {
        auto const& s     = rep.summands[k];
        json        entry = summand(G, S, s);
        if constexpr (B::enumerable) {
          entry["strong"] = verdict(verify_strong_summand(S, s.idempotent, s.N));
        } else {
          entry["strong"] = verdict(verify_strong_summand(S, eps, s.idempotent, s.N));
        }
        json per_g = json::array();
        for (std::size_t d = 0; d < crossed[k].degrees.size(); ++d) {
          auto const& r = crossed[k].results[d];
          per_g.push_back({{"g", crossed[k].degrees[d]},
                           {"unit_found", r.kind == CrossedResult<typename B::Element>::Kind::Found},
                           {"pairs_checked", r.pairs_checked},
                           {"detail", r.detail}});
        }
        entry["crossed"]       = verdict(crossed[k].verdict);
        entry["crossed_per_g"] = per_g;
        summands.push_back(std::move(entry));
      }
      out["summands"]  = summands;
      out["remainder"] = {{"idempotent", element(S, *rep.remainder)}, {"kind", to_string(rep.remainder_kind)}};
      if constexpr (B::enumerable) {
        out["cardinality_reconstructs"] = reconstructs(S, rep);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // commands
    ////////////////////////////////////////////////////////////////////////

    template <typename B>
    json cmd_analyze(B const& S) {
      using K  = typename CrossedResult<typename B::Element>::Kind;
      auto rep = analyze(S);
      json out;
      out["verdicts"] = {{"graded", verdict(rep.graded)},
                         {"symmetric", verdict(rep.symmetric)},
                         {"nearly_epsilon_strong", verdict(rep.nearly)},
                         {"epsilon_strong", verdict(rep.epsilon_strong)},
                         {"strong", verdict(rep.strong)},
                         {"epsilon_crossed", verdict(rep.crossed)}};
      out["epsilon"] = rep.epsilon ? epsilon_table(S, *rep.epsilon) : json(nullptr);
      json crossed   = json::array();
      for (std::size_t g = 0; g < rep.crossed_per_g.size(); ++g) {
        auto const& r     = rep.crossed_per_g[g];
        json        entry = {{"g", g},
                             {"result", r.kind == K::Found ? "Found" : r.kind == K::Absent ? "Absent" : "Unverified"},
                             {"pairs_checked", r.pairs_checked},
                             {"detail", r.detail}};
        if (r.witness) {
          entry["witness"] = {{"s", element(S, r.witness->first)}, {"t", element(S, r.witness->second)}};
        }
        crossed.push_back(std::move(entry));
      }
      out["crossed_search"] = crossed;
      out["notes"]          = rep.notes;
      return out;
    }

    template <typename B>
    EpsilonData<typename B::Element> require_epsilon_strong(B const& S, json& out) {
      auto es               = is_epsilon_strong(S);
      out["epsilon_strong"] = verdict(es.verdict);
      if (!es.data) {
        throw Stop{Precondition, "not epsilon-strong: " + es.verdict.detail};
      }
      return *es.data;
    }

    template <typename B>
    json cmd_epsilon(B const& S, json& out) {
      auto eps         = require_epsilon_strong(S, out);
      out["epsilon"]   = epsilon_table(S, eps);
      out["semigroup"] = semigroup(S, boolean_semigroup(S, eps), eps);
      return out;
    }

    template <typename B>
    json cmd_decompose(B const& S, json& out) {
      auto eps             = require_epsilon_strong(S, out);
      auto rep             = peel(S, eps);
      out["decomposition"] = decomposition(S, eps, rep);
      if (!rep.success) {
        throw Stop{Halted, "peeling halted: " + rep.halted};
      }
      return out;
    }

    json cmd_module(ScBackend const& S, GradedModule const& M, std::size_t cap, json& out) {
      auto const& G   = M.group();
      auto        es  = is_epsilon_strong(S);
      auto        sm  = S_of(M, cap);
      json        som = json::array();
      for (GroupElement g = 0; g < G.order(); ++g) {
        som.push_back({{"g", g},
                       {"size", sm.components[g].size()},
                       {"component_size", component_span(M, g, cap).size()}});
      }
      out["module"] = {{"basis", M.spec().basis_names},
                       {"degrees", M.spec().degrees},
                       {"cardinality", M.cardinality()}};
      out["ring_epsilon_strong"] = verdict(es.verdict);
      out["S_of_M"]              = som;
      out["symmetric"]           = verdict(is_symmetric_module(M, cap));
      out["epsilon_strong_module"] = verdict(is_epsilon_strong_module(M, cap));
      out["dade"]                = verdict(dade_condition(M, es.verdict, cap));
      if (es.data) {
        auto rep = peel(S, *es.data);
        if (rep.success) {
          json parts = json::array();
          for (auto const& s : decompose_module(M, rep, cap)) {
            parts.push_back({{"idempotent", element(S, s.idempotent)},
                             {"H", subset(G, s.H)},
                             {"remainder", s.remainder},
                             {"sizes", s.sizes},
                             {"condition", verdict(s.verdict)}});
          }
          out["decomposition"] = parts;
        } else {
          out["decomposition"] = nullptr;
          out["notes"].push_back("ring decomposition halted; module not split");
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // human rendering
    ////////////////////////////////////////////////////////////////////////

    std::string scalar_text(json const& j) {
      return j.is_string() ? j.get<std::string>() : j.dump();
    }

    bool flat(json const& j) {
      if (j.is_primitive()) {
        return true;
      }
      if (j.is_array()) {
        return std::all_of(j.begin(), j.end(), [](json const& x) { return x.is_primitive(); });
      }
      return false;
    }

    void render(json const& j, std::ostream& os, int indent);

    void render_value(std::string const& key, json const& v, std::ostream& os, int indent) {
      std::string pad(indent, ' ');
      if (v.is_object() && v.contains("verdict")) {
        os << pad << key << ": " << v["verdict"].get<std::string>();
        auto d = v["detail"].get<std::string>();
        os << (d.empty() ? "" : " (" + d + ")") << '\n';
      } else if (v.is_object() && v.contains("text") && v.size() <= 2 && (v.size() == 1 || v.contains("sparse")
                                                                         || v.contains("elements"))) {
        os << pad << key << ": " << v["text"].get<std::string>() << '\n';
      } else if (flat(v)) {
        if (v.is_array()) {
          os << pad << key << ": [";
          for (std::size_t k = 0; k < v.size(); ++k) {
            os << (k ? ", " : "") << scalar_text(v[k]);
          }
          os << "]\n";
        } else {
          os << pad << key << ": " << scalar_text(v) << '\n';
        }
      } else {
        os << pad << key << ":\n";
        render(v, os, indent + 2);
      }
    }

    void render(json const& j, std::ostream& os, int indent) {
      if (j.is_object()) {
        for (auto const& [k, v] : j.items()) {
          render_value(k, v, os, indent);
        }
      } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); ++k) {
          render_value("[" + std::to_string(k) + "]", j[k], os, indent);
        }
      } else {
        os << std::string(indent, ' ') << scalar_text(j) << '\n';
      }
    }

    void emit(json const& report, bool as_json, std::ostream& out) {
      if (as_json) {
        out << report.dump(2) << '\n';
      } else {
        render(report, out, 0);
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // dispatch
    ////////////////////////////////////////////////////////////////////////

    int execute(std::string const& command, Options const& o, std::ostream& out, std::ostream& err) {
      if (command == "examples") {
        if (o.example.empty()) {
          json names = io::example_names();
          emit({{"examples", names}}, o.json, out);
        } else {
          out << io::example(o.example).dump(2) << '\n';
        }
        return Ok;
      }

      auto   in = io::parse_ring(io::parse_text(read_file(o.files.at(0))));
      Bounds b{o.max_len, o.max_depth, o.closure_cap};
      json   report;
      report["command"] = command;
      report["input"]   = in.source;
      report["notes"]   = json::array();

      auto finish = [&](int code) {
        emit(report, o.json, out);
        return code;
      };

      try {
        if (in.sc) {
          ScBackend S(*in.sc, b);
          report["bounds"] = bounds(S.bounds());
          report["legend"] = legend(S.group(), false);
          if (command == "analyze") {
            report.update(cmd_analyze(S));
          } else if (command == "epsilon") {
            cmd_epsilon(S, report);
          } else if (command == "decompose") {
            cmd_decompose(S, report);
          } else {
            auto M = io::parse_module(*in.sc, io::parse_text(read_file(o.files.at(1))));
            cmd_module(S, M, o.closure_cap, report);
          }
        } else {
          LpaBackend S(*in.lpa, b);
          report["bounds"] = bounds(S.bounds());
          report["legend"] = legend(S.group(), true);
          if (command == "analyze") {
            report.update(cmd_analyze(S));
          } else if (command == "epsilon") {
            cmd_epsilon(S, report);
          } else if (command == "decompose") {
            cmd_decompose(S, report);
          } else {
            throw io::ParseError(o.files.at(0), "modules need a structure_constants ring");
          }
        }
      } catch (Stop const& s) {
        err << "grady: " << s.message << '\n';
        return finish(s.code);
      }
      return finish(Ok);
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Grading analysis and epsilon-strong decomposition of finite graded rings", "grady"};
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_option("--max-len", o.max_len, "Monomial length bound (0 picks 2|E^0||G|)");
    app.add_option("--max-depth", o.max_depth, "Rewriting depth bound (0 picks 2|E^0||G|)");
    app.add_option("--closure-cap", o.closure_cap, "Largest member set a closure may build");
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Classify the grading");
    analyze->add_option("ring", o.files, "Ring description")->required()->expected(1);
    auto* epsilon = app.add_subcommand("epsilon", "Epsilon table, B(E) and N(r)");
    epsilon->add_option("ring", o.files, "Ring description")->required()->expected(1);
    auto* decompose = app.add_subcommand("decompose", "Peel into strongly graded summands");
    decompose->add_option("ring", o.files, "Ring description")->required()->expected(1);
    auto* module = app.add_subcommand("module", "Module checks over a structure-constant ring");
    module->add_option("files", o.files, "Ring and module descriptions")->required()->expected(2);
    auto* examples = app.add_subcommand("examples", "Print a built-in example description");
    examples->add_option("name", o.example, "Example name; omit to list");
    for (auto* sub : {analyze, epsilon, decompose, module, examples}) {
      sub->fallthrough();
    }

    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (CLI::ParseError const& e) {
      auto code = app.exit(e, out, err);
      return code == 0 ? Ok : Usage;
    }

    auto command = app.get_subcommands().front()->get_name();
    try {
      return execute(command, o, out, err);
    } catch (io::ParseError const& e) {
      err << "grady: parse error: " << e.what() << '\n';
      return Usage;
    } catch (ValidationError const& e) {
      err << "grady: invalid " << to_string(e.kind()) << ": " << e.what() << '\n';
      return Usage;
    } catch (std::invalid_argument const& e) {
      err << "grady: invalid input: " << e.what() << '\n';
      return Usage;
    } catch (CapExceeded const& e) {
      err << "grady: " << e.what() << " (raise --closure-cap)\n";
      return Cap;
    } catch (std::exception const& e) {
      err << "grady: internal error: " << e.what() << '\n';
      return Internal;
    }
  }

}  // namespace grady::cli
