#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mop/commands.hpp"

using namespace mop;
using json = nlohmann::ordered_json;

namespace {

std::string sample(const std::string& name) {
  std::ifstream in(std::string(MOP_SAMPLES_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& command, const std::string& document, CommandOptions options = {}) {
  std::ostringstream out, err;
  const int code = run_command(command, document, options, out, err);
  return {code, out.str(), err.str()};
}

Run run_json(const std::string& command, const std::string& document, CommandOptions options = {}) {
  options.json = true;
  return run(command, document, options);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("faces on the pentagon") {
  const Run r = run("faces", sample("pentagon.mop"));
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "11 faces, f-vector (5,5,1)"));
  CHECK(contains(r.out, "dim 0: m0 p | q m4 | m1 | m3"));

  const json j = json::parse(run_json("faces", sample("pentagon.mop")).out);
  CHECK(j["f_vector"] == json::array({5, 5, 1}));
  CHECK(j["faces"].size() == 11);
  CHECK(j["faces"][0].contains("blocks"));
  CHECK(j["faces"][0].contains("free_blocks"));
  CHECK(j["faces"][0]["dim"] == 2);
}

TEST_CASE("conditional-dim on the chain") {
  CommandOptions opts;
  opts.point = "p=1,q=2,r=3,s=4";
  const Run r = run("conditional-dim", sample("chain_conditions.mop"), opts);
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "kernel dimension: 2 (oracle: 2)"));

  const json j = json::parse(run_json("conditional-dim", sample("chain_conditions.mop"), opts).out);
  CHECK(j["columns"] == json::array({"p", "q", "r", "s"}));
  CHECK(j["tiling_matrix"] == json::parse(R"([["1","0","1","0"],["0","1","0","1"]])"));
  CHECK(j["kernel_dim"] == 2);
  CHECK(j["oracle_dim"] == 2);

  opts.point = "p=2,q=2,r=2,s=4";
  const json w = json::parse(run_json("conditional-dim", sample("chain_conditions.mop"), opts).out);
  CHECK(w["kernel_dim"] == 0);
  CHECK(w["columns"] == json::array({"p+q+r", "s"}));

  opts.point = "p=0,q=0,r=0,s=5";
  CHECK(run("conditional-dim", sample("chain_conditions.mop"), opts).code == kExitDomainError);
  CHECK(run("conditional-dim", sample("chain_conditions.mop")).code == kExitDomainError);
  opts.point = "p=1;q";
  CHECK(run("conditional-dim", sample("chain_conditions.mop"), opts).code == kExitParseError);
}

TEST_CASE("facets on the redundant square") {
  const Run r = run("facets", sample("redundant_square.mop"));
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "removed cover p<q"));
  CHECK(contains(r.out, "4 facets (oracle: 4)"));

  const json j = json::parse(run_json("facets", sample("redundant_square.mop")).out);
  CHECK(j["removed_covers"] == json::parse(R"([["p","q"]])"));
  CHECK(j["facets"].size() == 4);
  CHECK(j["oracle_facet_count"] == 4);
  CHECK(j.contains("covers"));
}

TEST_CASE("check, dim, vertices, minkowski, regularize") {
  const json c = json::parse(run_json("check", sample("redundant_square.mop")).out);
  for (const char* key : {"elements", "covers", "marks", "strict", "regular", "pointed", "dim", "conditions"})
    CHECK(c.contains(key));
  CHECK(c["strict"] == true);
  CHECK(c["regular"] == false);
  CHECK(c["dim"] == 2);

  CHECK(run("dim", sample("pentagon.mop")).out == "2\n");
  const json d = json::parse(run_json("dim", sample("chain_conditions.mop")).out);
  CHECK(d["dim"] == 4);
  CHECK(d["conditional_dim"] == 2);

  const json v = json::parse(run_json("vertices", sample("pentagon.mop")).out);
  CHECK(v["vertices"].size() == 5);
  CHECK(v["elements"].size() == 6);

  const json m = json::parse(run_json("minkowski", sample("pentagon.mop")).out);
  CHECK(m["holds"] == true);
  CHECK(m["summands"].size() == 4);

  const Run reg = run("regularize", sample("redundant_square.mop"));
  CHECK(reg.code == kExitOk);
  CHECK(contains(reg.out, "# removed cover p<q"));
  CHECK(contains(reg.out, "covers: m0<p p<m1 q<m3 m2<q"));
}

TEST_CASE("oracle-verify passes on every sample") {
  for (const char* name : {"pentagon.mop", "redundant_square.mop", "chain_conditions.mop"}) {
    CommandOptions opts;
    opts.seed = 3;
    const Run r = run("oracle-verify", sample(name), opts);
    CHECK_MESSAGE(r.code == kExitOk, name << "\n" << r.out << r.err);
    CHECK_FALSE(contains(r.out, "FAIL"));
  }
}

TEST_CASE("exit codes") {
  CHECK(run("frobnicate", sample("pentagon.mop")).code == kExitParseError);
  CHECK(run("faces", "elements a\n").code == kExitParseError);

  const Run bad = run("check", "elements: a b\ncovers: a<b\nmarks: a=1 b=0\n");
  CHECK(bad.code == kExitDomainError);
  CHECK(contains(bad.err, "order-preserving"));

  CHECK(run("vertices", "elements: a b\ncovers: a<b\n").code == kExitDomainError);
  CHECK(run("minkowski", "elements: a b\ncovers: a<b\n").code == kExitDomainError);

  CommandOptions small;
  small.max_elements = 3;
  CHECK(run("faces", sample("pentagon.mop"), small).code == kExitDomainError);
}

TEST_CASE("every listed command runs on the pentagon") {
  CommandOptions opts;
  opts.point = "p=1,q=2";
  for (const auto& name : command_names()) {
    CHECK_MESSAGE(run(name, sample("pentagon.mop"), opts).code == kExitOk, name);
    CHECK_MESSAGE(json::accept(run_json(name, sample("pentagon.mop"), opts).out), name);
  }
}
