#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cliffcat/cli.h"

using cliffcat::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("act") {
  auto r = run({"act", "--op", "gamma", "--index", "5/2", "--weight", "(3/2|)"});
  CHECK(r.code == 0);
  CHECK(r.out == "+1*(5/2,3/2|)\n");
  r = run({"act", "--op", "eta", "--index", "1/2", "--weight", "(3/2|)"});
  CHECK(r.out == "0\n");
  r = run({"act", "--op", "gamma", "--index", "1/2", "--vector", "+1*(3/2|) +2*(5/2|)"});
  CHECK(r.out == "-1*(3/2,1/2|) -2*(5/2,1/2|)\n");
  r = run({"act", "--element", "v[1/2]", "--fock", "w[|]"});
  CHECK(r.out == "w[1/2 |]\n");
  r = run({"act", "--op", "gamma", "--index", "1/2", "--weight", "(1/2,3/2|)", "--raw"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("act json") {
  auto r = run({"act", "--op", "gamma", "--index", "5/2", "--weight", "(3/2|)", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 1);
  CHECK(j[0]["coeff"] == 1);
  CHECK(j[0]["weight"] == "(5/2,3/2|)");
}

TEST_CASE("char") {
  CHECK(run({"char", "--weight", "(|3/2)"}).out == "e^{d1} + 1 + e^{-d1}\n");
  CHECK(run({"char", "--weight", "(3/2|)"}).out == "e^{e1} + 1 + e^{-e1}\n");
  CHECK(run({"char", "--weight", "(3/2,3/2|)", "--raw"}).out == "0\n");
  auto j = nlohmann::json::parse(run({"char", "--weight", "(|3/2)", "--format", "json"}).out);
  CHECK(j["m"] == 0);
  CHECK(j["n"] == 1);
  CHECK(j["terms"].size() == 3);
  CHECK(j["terms"][0]["exps"] == nlohmann::json::array({2}));
}

TEST_CASE("fock-map") {
  CHECK(run({"fock-map", "--weight", "(3/2|1/2)"}).out == "w[3/2 | -1/2]\n");
  CHECK(run({"fock-map", "--weight", "(|)"}).out == "w[|]\n");
  CHECK(run({"fock-map", "--fock", "w[3/2 | -1/2]"}).out == "+1*(3/2|1/2)\n");
}

TEST_CASE("translate and block") {
  CHECK(run({"translate", "--direction", "lower", "--index", "1/2", "--weight", "(1/2|)"}).out == "+1*(3/2|)\n");
  CHECK(run({"translate", "--direction", "lower", "--index", "1/2", "--weight", "(|3/2)"}).out == "+1*(|1/2)\n");
  CHECK(run({"block", "--weight", "(3/2|1/2)"}).out == "{\"1/2\":-1,\"3/2\":1}\n");
  CHECK(run({"block", "--weight", "(|)"}).out == "{}\n");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "clifford", "--bound", "5/2", "--grade-max", "2"});
  CHECK(r.code == 0);
  r = run({"verify", "--suite", "koszul", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["suites"][0]["suite"] == "koszul");
  CHECK(j["suites"][0]["failures"].empty());
}

TEST_CASE("info") {
  auto r = run({"info", "--grade-max", "1", "--bound", "3/2", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["total_weights"] == 9);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"char", "--weight", "(1/2,3/2|)"}).code == 2);
  CHECK(run({"char", "--weight", "(1/2,3/2|)"}).err.find("--raw") != std::string::npos);
  CHECK(run({"char", "--weight", "(1|)"}).code == 2);
  CHECK(run({"act", "--op", "delta", "--index", "1/2", "--weight", "(|)"}).code == 2);
  CHECK(run({"act", "--op", "gamma", "--weight", "(|)"}).code == 2);
  CHECK(run({"verify", "--suite", "nothing"}).code == 2);
  CHECK(run({"verify", "--bound", "3"}).code == 2);
  CHECK(run({"translate", "--direction", "lower", "--index", "-1/2", "--weight", "(|)"}).code == 2);
}
