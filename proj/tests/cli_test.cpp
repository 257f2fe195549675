#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "shiftturan/cli.hpp"

using namespace shiftturan;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("shiftturan_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("extremal values") {
  CHECK(run({"extremal", "clique", "--n", "7", "--k", "2", "--s", "2"}).out == "11\n");
  CHECK(run({"extremal", "edges", "--n", "7", "--k", "2"}).out == "11\n");
  CHECK(run({"extremal", "star", "--n", "6", "--k", "2", "--s", "1", "--t", "2"}).out == "30\n");
  CHECK(run({"extremal", "bip", "--n", "4", "--k", "2", "--s", "1", "--t", "2"}).out == "16\n");
  const Run out_of_range = run({"extremal", "clique", "--n", "4", "--k", "2", "--s", "2"});
  CHECK(out_of_range.code == kExitUsage);
  CHECK(out_of_range.out.empty());
  CHECK(out_of_range.err.rfind("error: ", 0) == 0);
  CHECK(run({"extremal", "star", "--n", "6", "--k", "2", "--s", "1"}).code == kExitUsage);
}

TEST_CASE("scan emits CSV") {
  CHECK(run({"scan", "--family", "H-clique", "--n", "7", "--k", "2", "--s", "2"}).out ==
        "param,value\n3,11\n4,9\n5,10\n");
  CHECK(run({"scan", "--family", "bip-g", "--n", "4", "--k", "2", "--s", "1", "--t", "2"}).out ==
        "param,value\n0,16\n1,12\n2,16\n");
  CHECK(run({"scan", "--family", "H-star", "--n", "7", "--k", "2", "--s", "1", "--t", "2"})
            .out.rfind("param,value\n3,35\n", 0) == 0);
  CHECK(run({"scan", "--family", "bip-f", "--n", "4", "--k", "2", "--s", "1"}).code == kExitUsage);
}

TEST_CASE("graph commands") {
  const std::string single = write_temp("single.txt", "3 1\n2 3\n");
  CHECK(run({"shift", "--input", single, "--i", "1", "--j", "2"}).out == "3 1\n1 3\n");
  CHECK(run({"shift", "--input", single, "--full"}).out == "3 1\n1 2\n");
  CHECK(run({"shift", "--input", single}).code == kExitUsage);
  CHECK(run({"shift", "--input", single, "--i", "2", "--j", "1"}).code == kExitUsage);

  const std::string k5 = write_temp("k5.txt", "5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n");
  CHECK(run({"nu", "--input", k5}).out == "2\n");
  CHECK(run({"count", "--input", k5, "--pattern", "clique:3"}).out == "10\n");
  CHECK(run({"count", "--input", k5, "--pattern", "star:1,2"}).out == "30\n");
  CHECK(run({"count", "--input", k5, "--pattern", "bip:1,1"}).code == kExitUsage);
  CHECK(run({"count", "--input", k5, "--pattern", "wheel:3"}).code == kExitUsage);

  const std::string loop = write_temp("loop.txt", "2 1\n1 1\n");
  const Run bad = run({"nu", "--input", loop});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("self-loop") != std::string::npos);

  CHECK(run({"nu", "--input", "missing.txt"}).code == kExitUsage);
}

TEST_CASE("bipartite commands") {
  const std::string path = write_temp("path.txt", "2 1 2\n1 1\n2 1\n");
  CHECK(run({"cover", "--input", path}).out == "Y:1\n");
  const std::string k23 = write_temp("k23.txt", "2 3 6\n1 1\n1 2\n1 3\n2 1\n2 2\n2 3\n");
  CHECK(run({"cover", "--input", k23}).out == "1 2\n");
  CHECK(run({"count", "--input", k23, "--pattern", "bip:1,2"}).out == "9\n");
  CHECK(run({"count", "--input", k23, "--pattern", "bip:2,2"}).out == "3\n");

  // The same path as a general edge list: X = {1, 2}, Y = {3}.
  const std::string general = write_temp("path_general.txt", "3 2\n1 3\n2 3\n");
  CHECK(run({"cover", "--input", general, "--bipartite", "2,1"}).out == "Y:1\n");
  CHECK(run({"cover", "--input", general}).code == kExitUsage);
  CHECK(run({"cover", "--input", general, "--bipartite", "1,2"}).code == kExitUsage);
  CHECK(run({"cover", "--input", general, "--bipartite", "2x1"}).code == kExitUsage);
}

TEST_CASE("verify subcommand") {
  const Run thm = run({"verify", "thm12", "--n", "6", "--k", "2", "--s", "2"});
  CHECK(thm.code == kExitOk);
  CHECK(thm.out.find("PASS oracle_max: expected 10, observed 10") != std::string::npos);

  const Run csv = run({"verify", "thm14", "--n", "3", "--k", "1", "--s", "1", "--t", "2", "--csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out ==
        "check,params,expected,observed,status\n"
        "oracle_max,n=3;k=1;s=1;t=2,3,3,pass\n"
        "witness_valid,n=3;k=1;s=1;t=2,0,0,pass\n");

  CHECK(run({"verify", "lemma21", "--n", "4"}).code == kExitOk);
  CHECK(run({"verify", "lemma22", "--n", "7", "--samples", "50", "--seed", "3"}).code == kExitOk);
  CHECK(run({"verify", "lemma31", "--n", "4"}).code == kExitOk);
  CHECK(run({"verify", "lemma32", "--n", "5", "--k", "1"}).code == kExitOk);
  CHECK(run({"verify", "koenig", "--n", "3", "--k", "2"}).code == kExitOk);
  CHECK(run({"verify", "koenig", "--n", "6", "--samples", "20"}).code == kExitOk);
  CHECK(run({"verify", "thm11", "--n", "5", "--k", "1", "--jobs", "2"}).code == kExitOk);
  CHECK(run({"verify", "thm13", "--n", "5", "--k", "1", "--s", "1", "--t", "2"}).code == kExitOk);
  CHECK(run({"verify", "thm12", "--n", "6", "--k", "2"}).code == kExitUsage);
  CHECK(run({"verify", "thm99", "--n", "6"}).code == kExitUsage);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"verify", "lemma21", "--n", "9", "--samples", "30",
                                         "--seed", "42", "--p", "0.3"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed=42") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"nu"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_SUITE_END();
