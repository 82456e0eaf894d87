#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grady/cli.hpp"
#include "grady/io.hpp"
#include "grady/sc_fixtures.hpp"
#include "oracle.hpp"

using namespace grady;
using io::json;
namespace fs = std::filesystem;

namespace {
  struct Result {
    int         code;
    std::string out, err;
  };

  Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir() {
    static fs::path d = [] {
      auto p = fs::current_path() / "cli_fixtures";
      fs::create_directories(p);
      return p;
    }();
    return d;
  }

  std::string write(std::string const& name, std::string const& text) {
    auto          p = dir() / name;
    std::ofstream f(p, std::ios::binary);
    f << text;
    return p.string();
  }

  std::string example_file(std::string const& name) {
    auto r = invoke({"examples", name});
    REQUIRE(r.code == 0);
    return write(name + ".json", r.out);
  }

  json run_json(std::vector<std::string> args, int expect = 0) {
    args.push_back("--json");
    auto r = invoke(args);
    CHECK(r.code == expect);
    return json::parse(r.out);
  }

  void no_floats(json const& j) {
    CHECK_FALSE(j.is_number_float());
    if (j.is_structured()) {
      for (auto const& x : j) {
        no_floats(x);
      }
    }
  }

  std::vector<std::string> const ring_examples = {"dade6", "group-ring", "halting", "lpa-z4",
                                                  "lpa-z8", "nilpotent", "trivial"};
}  // namespace

TEST_CASE("examples list and round-trip") {
  auto list = run_json({"examples"});
  CHECK(list["examples"].size() == 8);
  for (auto const& name : ring_examples) {
    auto doc = json::parse(invoke({"examples", name}).out);
    auto in  = io::parse_ring(doc);
    CHECK(doc == (in.sc ? io::ring_json(*in.sc) : io::leavitt_json(*in.lpa)));
  }
  auto D   = dade6();
  auto col = json::parse(invoke({"examples", "column"}).out);
  CHECK(io::module_json(io::parse_module(D.ring, col)) == col);

  auto bad = invoke({"examples", "nope"});
  CHECK(bad.code == cli::Usage);
  CHECK(bad.out.empty());
}

TEST_CASE("analyze dade6") {
  auto r = run_json({"analyze", example_file("dade6")});
  CHECK(r["verdicts"]["epsilon_strong"]["verdict"] == "Yes");
  CHECK(r["verdicts"]["strong"]["verdict"] == "No");
  CHECK(r["verdicts"]["epsilon_crossed"]["verdict"] == "No");
  CHECK(r["crossed_search"][1]["pairs_checked"] == 81 * 81);
  auto D = dade6();
  CHECK(r["epsilon"][1]["epsilon"]["sparse"] == io::sparse_json(D.ring.space(), D.element(oracle::diag(4, 4, 4))));
  no_floats(r);

  // the fixture form gives the same analysis
  auto f = run_json({"analyze", write("dade6-fixture.json", R"({"kind":"fixture","name":"dade6"})")});
  f.erase("input");
  r.erase("input");
  CHECK(f == r);
}

TEST_CASE("analyze and epsilon on Leavitt fixtures") {
  auto r4 = run_json({"analyze", example_file("lpa-z4")});
  auto e4 = r4["epsilon"];
  CHECK(e4[0]["epsilon"]["text"] == "v1+v2+v3+v4");
  CHECK(e4[2]["epsilon"]["text"] == "v1+v2+v3");
  CHECK(e4[1]["zero"] == true);
  CHECK(e4[3]["zero"] == true);

  auto r8 = run_json({"epsilon", example_file("lpa-z8")});
  auto sg = r8["semigroup"];
  CHECK(sg["size"] == 4);
  CHECK(sg["nonzero_size"] == 3);
  std::vector<std::string> texts;
  for (auto const& e : sg["elements"]) {
    texts.push_back(e["element"]["text"]);
  }
  std::sort(texts.begin(), texts.end());
  CHECK(texts == std::vector<std::string>{"0", "v1+v2+v3", "v1+v2+v3+v4", "v2+v3"});
  REQUIRE(sg["minimal"].size() == 1);
  CHECK(sg["elements"][sg["minimal"][0].get<std::size_t>()]["element"]["text"] == "v2+v3");
  CHECK(sg["centrality"][0]["N"]["elements"] == json({0, 2, 4, 6}));
  CHECK(sg.contains("note"));
}

TEST_CASE("decompose") {
  auto r8 = run_json({"decompose", example_file("lpa-z8")})["decomposition"];
  CHECK(r8["outcome"] == "Success");
  CHECK(r8["rounds"].size() == 2);
  CHECK(r8["rounds"][0]["B_size"] == 4);
  CHECK(r8["rounds"][1]["B_size"] == 3);
  REQUIRE(r8["summands"].size() == 2);
  CHECK(r8["summands"][0]["idempotent"]["text"] == "v2+v3");
  CHECK(r8["summands"][0]["N"]["elements"] == json({0, 2, 4, 6}));
  CHECK(r8["summands"][1]["idempotent"]["text"] == "v1");
  CHECK(r8["summands"][1]["N"]["elements"] == json({0, 4}));
  CHECK(r8["remainder"]["idempotent"]["text"] == "v4");
  CHECK(r8["remainder"]["kind"] == "TrivialGradation");

  auto rd = run_json({"decompose", example_file("dade6")})["decomposition"];
  auto D  = dade6();
  CHECK(rd["summands"][0]["idempotent"]["sparse"]
        == io::sparse_json(D.ring.space(), D.element(oracle::diag(4, 4, 4))));
  CHECK(rd["summands"][0]["strong"]["verdict"] == "Yes");
  CHECK(rd["summands"][0]["crossed"]["verdict"] == "No");
  CHECK(rd["remainder"]["idempotent"]["sparse"] == io::sparse_json(D.ring.space(), D.element(oracle::diag(3, 3, 3))));
  CHECK(rd["remainder"]["kind"] == "TrivialGradation");
  CHECK(rd["cardinality_reconstructs"] == true);

  auto rt = run_json({"decompose", example_file("trivial")})["decomposition"];
  CHECK(rt["summands"].size() == 1);
  CHECK(rt["remainder"]["kind"] == "Zero");
}

TEST_CASE("module command") {
  auto r = run_json({"module", example_file("dade6"), example_file("column")});
  CHECK(r["symmetric"]["verdict"] == "Yes");
  CHECK(r["dade"]["verdict"] == "Yes");
  CHECK(r["epsilon_strong_module"]["verdict"] == "Yes");
  CHECK(r["decomposition"][0]["sizes"] == json({9, 3}));
  CHECK(r["decomposition"][1]["sizes"] == json({4, 1}));

  auto reg = run_json({"module", example_file("dade6"), write("regular.json", R"({"kind":"fixture","name":"regular"})")});
  CHECK(reg["S_of_M"][1]["size"] == 81);
}

TEST_CASE("exit codes") {
  auto code = [](std::vector<std::string> args) {
    args.push_back("--json");
    auto r = invoke(args);
    if (r.code != 0 && r.code != cli::Precondition && r.code != cli::Halted) {
      CHECK(r.out.empty());
    }
    if (r.code != 0) {
      CHECK_FALSE(r.err.empty());
    }
    return r.code;
  };
  CHECK(code({"analyze", write("bad.json", "{ not json")}) == cli::Usage);
  CHECK(code({"analyze", write("nokind.json", R"({"group":{"type":"cyclic","n":2}})")}) == cli::Usage);
  CHECK(code({"analyze", (dir() / "missing.json").string()}) == cli::Usage);
  CHECK(code({"frobnicate"}) == cli::Usage);
  CHECK(code({"analyze"}) == cli::Usage);
  CHECK(code({"analyze", example_file("dade6"), "--max-len", "x"}) == cli::Usage);

  // a product that leaves its degree
  auto doc = json::parse(invoke({"examples", "group-ring"}).out);
  doc["table"][1]["value"] = {{"0", {1}}};
  CHECK(code({"analyze", write("corrupt.json", doc.dump())}) == cli::Usage);

  auto badg = json::parse(invoke({"examples", "lpa-z4"}).out);
  badg["edges"][0]["weight"] = 9;
  auto r = invoke({"analyze", write("badweight.json", badg.dump()), "--json"});
  CHECK(r.code == cli::Usage);
  CHECK(r.err.find("/edges/0/weight") != std::string::npos);

  CHECK(code({"module", example_file("lpa-z4"), example_file("column")}) == cli::Usage);
  CHECK(code({"analyze", example_file("dade6"), "--closure-cap", "10"}) == cli::Cap);
  CHECK(code({"decompose", example_file("nilpotent")}) == cli::Precondition);
  CHECK(code({"epsilon", example_file("nilpotent")}) == cli::Precondition);
  CHECK(code({"analyze", example_file("nilpotent")}) == cli::Ok);

  auto h = invoke({"decompose", example_file("halting"), "--json"});
  CHECK(h.code == cli::Halted);
  auto hj = json::parse(h.out);
  CHECK(hj["decomposition"]["outcome"] == "Halted");
  CHECK(invoke({"--help"}).code == cli::Ok);
}

TEST_CASE("determinism") {
  for (auto const& name : ring_examples) {
    auto file = example_file(name);
    for (std::string cmd : {"analyze", "epsilon", "decompose"}) {
      auto a = invoke({cmd, file, "--json"});
      auto b = invoke({cmd, file, "--json"});
      CHECK(a.out == b.out);
      CHECK(a.code == b.code);
      CHECK(json::parse(a.out).dump(2) + "\n" == a.out);  // sorted keys
    }
  }
  auto a = invoke({"module", example_file("dade6"), example_file("column"), "--json"});
  auto b = invoke({"module", example_file("dade6"), example_file("column"), "--json"});
  CHECK(a.out == b.out);
}
