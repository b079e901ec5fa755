#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shirshov/cli.hpp"
#include "shirshov/serialize.hpp"

using namespace shirshov;
using nlohmann::json;

namespace {

struct CliRun {
  int exit_code;
  json report;
  std::string raw;
  std::string errors;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  CliRun result{code, json(), out.str(), err.str()};
  if (!result.raw.empty() && result.raw.front() == '{') result.report = json::parse(result.raw);
  return result;
}

}  // namespace

TEST_CASE("divide mirrors the library and re-validates through JSON") {
  auto r = run({"divide", "--word", "cba", "--sense", "ordinary"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["schema"] == 1);
  CHECK(r.report["result"]["n_max"] == 3);
  CHECK(r.report["result"]["blocks"] == json::array({"c", "b", "a"}));

  OrdinaryDivision division;
  division.boundaries = r.report["result"]["boundaries"].get<std::vector<int>>();
  CHECK(validate(Word::parse("cba"), division));
}

TEST_CASE("tail witnesses round-trip") {
  auto r = run({"divide", "--word", "bab", "--sense", "tail"});
  REQUIRE(r.exit_code == 0);
  TailDivision division;
  division.positions = r.report["result"]["positions"].get<std::vector<int>>();
  CHECK(division.positions == std::vector<int>{0, 1});
  CHECK(validate(Word::parse("bab"), division));
}

TEST_CASE("power witnesses round-trip and re-validate") {
  auto r = run({"power", "--word", "ababab", "--d", "3"});
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.report["result"]["found"] == true);
  auto witness = power_witness_from_json(r.report["result"]["witness"]);
  CHECK(validate(Word::parse("ababab"), witness));
  CHECK(witness.exponent == 3);
}

TEST_CASE("cancel verdicts round-trip from the report") {
  auto r = run({"cancel", "--word", "cba", "--n", "2", "--d", "2"});
  REQUIRE(r.exit_code == 0);
  auto verdict = verdict_from_json(r.report["result"]);
  CHECK(verdict.kind == CancelKind::Divisible);
  REQUIRE(verdict.division.has_value());
  CHECK(verdict.division->blocks() == 2);
  CHECK(validate(Word::parse("cba"), *verdict.division));
}

TEST_CASE("exit code 1 on usage problems") {
  CHECK(run({"divide"}).exit_code == 1);                       // no word
  CHECK(run({"power", "--word", "aa", "--d", "1"}).exit_code == 1);
  CHECK(run({"nonsense"}).exit_code == 1);
  CHECK(run({}).exit_code == 1);
}

TEST_CASE("exit code 3 on budget refusals") {
  CHECK(run({"xi", "--k", "12", "--n", "3"}).exit_code == 3);
  CHECK(run({"process", "--p", "7", "--k", "8"}).exit_code == 3);
  CHECK(run({"verify", "--l", "2", "--n", "50", "--d", "3", "--cap", "10"}).exit_code == 3);
}

TEST_CASE("lemma sweep demands a seed for random sampling") {
  auto r = run({"lemma", "2-10", "--sweep", "random", "--l", "3", "--max-len", "12",
                "--count", "5", "--n", "1", "--d", "2"});
  CHECK(r.exit_code == 1);

  auto seeded = run({"lemma", "2-10", "--sweep", "random", "--l", "3", "--max-len", "12",
                     "--count", "5", "--n", "1", "--d", "2", "--seed", "7"});
  CHECK(seeded.exit_code == 0);
  CHECK(seeded.report["result"]["counterexamples"] == 0);
}

TEST_CASE("identical config and seed give byte-identical reports modulo timing") {
  std::vector<std::string> args{"lemma", "2-10", "--sweep",  "random", "--l",  "3",
                                "--max-len", "20",  "--count", "50",     "--n",  "1",
                                "--d",       "2",   "--seed",  "123"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.exit_code == 0);
  a.report.erase("timing_ms");
  b.report.erase("timing_ms");
  CHECK(a.report.dump() == b.report.dump());

  // threads may change scheduling but not the report
  auto threaded = run([&] {
    auto copy = args;
    copy.push_back("--threads");
    copy.push_back("4");
    return copy;
  }());
  threaded.report.erase("timing_ms");
  CHECK(a.report.dump() == threaded.report.dump());
}

TEST_CASE("bounds subcommand prints certified values") {
  auto exact = run({"bounds", "--which", "psi-log2", "--n", "2", "--d", "2", "--l", "2"});
  CHECK(exact.report["result"]["exact"] == "549755813888");

  auto interval = run({"bounds", "--which", "psi-log3", "--n", "2", "--d", "2", "--l", "2"});
  CHECK(interval.report["result"].contains("lo"));
  CHECK(interval.report["result"].contains("hi"));
  CHECK(interval.report["result"]["lo"].get<std::string>() <=
        interval.report["result"]["hi"].get<std::string>());

  auto compare = run({"bounds", "--which", "compare", "--n", "3", "--l", "2"});
  CHECK(compare.report["result"]["lopatin_vs_psi_log3"] == "less");
}

TEST_CASE("precision can come from the environment") {
  setenv("SHIRSHOV_PRECISION_BITS", "128", 1);
  auto r = run({"bounds", "--which", "psi-log3", "--n", "2", "--d", "2", "--l", "2"});
  unsetenv("SHIRSHOV_PRECISION_BITS");
  CHECK(r.exit_code == 0);
  CHECK(r.report["params"]["precision_bits"] == 128);
}

TEST_CASE("removal traces round-trip through JSON and reconstruct") {
  auto r = run({"algorithm51", "--word", "cababababababababac", "--n", "2"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["reconstructs"] == true);
  auto trace = removal_trace_from_json(r.report["result"]);
  CHECK(validate(trace));
  CHECK(reconstruct(trace) == Word::parse("cababababababababac"));
}

TEST_CASE("search checkpoints resume from files") {
  std::string cp_file = "cli_test_checkpoint.json";
  auto paused = run({"search", "--l", "2", "--n", "2", "--d", "3", "--sense", "ordinary",
                     "--node-budget", "4", "--checkpoint", cp_file});
  REQUIRE(paused.exit_code == 0);
  CHECK(paused.report["result"]["done"] == false);

  auto resumed = run({"search", "--l", "2", "--n", "2", "--d", "3", "--sense", "ordinary",
                      "--resume", cp_file});
  REQUIRE(resumed.exit_code == 0);
  CHECK(resumed.report["result"]["done"] == true);
  CHECK(resumed.report["result"]["exhausted"] == true);

  auto direct = run({"search", "--l", "2", "--n", "2", "--d", "3", "--sense", "ordinary"});
  CHECK(resumed.report["result"]["max_length"] == direct.report["result"]["max_length"]);
  CHECK(resumed.report["result"]["nodes_explored"] == direct.report["result"]["nodes_explored"]);
  std::remove(cp_file.c_str());
}

TEST_CASE("csv and text formats flatten the same result") {
  auto csv = run({"xi", "--k", "4", "--n", "3", "--format", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.raw == "xi\n14\n");

  auto text = run({"xi", "--k", "4", "--n", "3", "--format", "text"});
  CHECK(text.raw == "xi: 14\n");
}

TEST_CASE("reports can be written to a file") {
  std::string out_file = "cli_test_report.json";
  auto r = run({"xi", "--k", "3", "--n", "3", "--out", out_file});
  CHECK(r.exit_code == 0);
  CHECK(r.raw.empty());
  std::ifstream in(out_file);
  REQUIRE(in.good());
  json report;
  in >> report;
  CHECK(report["result"]["xi"] == 5);
  std::remove(out_file.c_str());
}

TEST_CASE("golden envelope: schema and layout are stable") {
  auto r = run({"divide", "--word", "cba", "--sense", "ordinary"});
  r.report.erase("timing_ms");
  CHECK(r.report.dump() ==
        "{\"command\":\"divide\","
        "\"params\":{\"sense\":\"ordinary\",\"word\":\"cba\"},"
        "\"result\":{\"blocks\":[\"c\",\"b\",\"a\"],"
        "\"boundaries\":[0,1,2,3],\"n_max\":3,\"prefix\":\"\"},"
        "\"schema\":1}");
}

TEST_CASE("words can come from files") {
  std::string word_file = "cli_test_word.txt";
  {
    std::ofstream out(word_file);
    out << "cba\n";
  }
  auto r = run({"divide", "--word-file", word_file, "--sense", "ordinary"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["result"]["n_max"] == 3);
  std::remove(word_file.c_str());
}

TEST_CASE("violation exit code on failed checks") {
  // lemma 5-3 on a healthy word exits 0
  auto ok = run({"lemma", "5-3", "--word", "aaaaaaaaaa", "--n", "2"});
  CHECK(ok.exit_code == 0);
}

TEST_CASE("process validates explicit word lists") {
  auto good = run({"process", "--p", "2", "--k", "3", "--words", "01,10,01"});
  CHECK(good.exit_code == 0);
  CHECK(good.report["result"]["valid"] == true);

  auto bad = run({"process", "--p", "2", "--k", "3", "--words", "10,10"});
  CHECK(bad.report["result"]["valid"] == false);

  auto malformed = run({"process", "--p", "2", "--k", "3", "--words", "11"});
  CHECK(malformed.exit_code == 1);
}

TEST_CASE("chains subcommand reports width equal to cover size") {
  auto r = run({"chains", "--word", "abacaba", "--d", "1"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["result"]["width"] == r.report["result"]["chains"]);
  CHECK(r.report["result"]["chains"] == r.report["result"]["greedy_chains"]);
}
