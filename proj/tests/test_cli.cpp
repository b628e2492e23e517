#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "regrade/io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(REGRADE_BIN) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

regrade::json first_json(const std::string& out) {
  return regrade::json::parse(out.substr(0, out.rfind('}') + 1));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit code contract") {
  CHECK(run_cli("regular check twisted:standard:2").exit_code == 0);   // true verdict
  CHECK(run_cli("regular paperA2").exit_code == 1);                    // not regular
  CHECK(run_cli("regular matrix paperB").exit_code == 1);              // not minimal
  CHECK(run_cli("regular matrix paperA2").exit_code == 1);             // no bicharacter
  CHECK(run_cli("regular check paperB --state-cap 1").exit_code == 0); // undecided
  CHECK(run_cli("algebra validate unknown:thing").exit_code == 2);     // input error
  CHECK(run_cli("codim paperB --max-n 9").exit_code == 2);             // above the cap
  CHECK(run_cli("group info 2x2").exit_code == 0);
  CHECK(run_cli("verify miller").exit_code == 0);
  CHECK(run_cli("verify no-such-suite").exit_code == 2);
}

TEST_CASE("undecided closure is reported, not failed") {
  const RunResult r = run_cli("regular check paperB --state-cap 1");
  CHECK(r.exit_code == 0);
  const regrade::json j = first_json(r.out);
  CHECK(j["condition_i"]["status"] == "undecided");
  CHECK(j["status"] == "undecided");
}

TEST_CASE("paperA2 report carries the condition (ii) witness") {
  const RunResult r = run_cli("regular paperA2");
  const regrade::json j = first_json(r.out);
  CHECK(j["condition_i"]["status"] == "verified");
  CHECK(j["condition_ii"]["holds"] == false);
  CHECK(j["condition_ii"]["witness"] == regrade::json::array({"zt", "t"}));
}

TEST_CASE("codim sweep matches the documented example") {
  const RunResult r = run_cli("codim \"tensor(twisted:pauli2,local:1,1)\" --max-n 4");
  CHECK(r.exit_code == 0);
  const regrade::json j = regrade::json::parse(r.out.substr(0, r.out.find("\nn=") + 1));
  std::vector<long> seq;
  for (const auto& item : j["results"]) seq.push_back(item["graded"].get<long>());
  CHECK(seq == std::vector<long>{2, 4, 8, 16});
}

TEST_CASE("reports are byte deterministic") {
  const std::string a = run_cli("regular check twisted:standard:2").out;
  const std::string b = run_cli("regular check twisted:standard:2").out;
  CHECK(a == b);
  CHECK(!a.empty());
  const std::string c = run_cli("codim paperB --max-n 3 --ordinary --tuples all").out;
  const std::string d = run_cli("codim paperB --max-n 3 --ordinary --tuples all").out;
  CHECK(c == d);
}

TEST_CASE("environment variable raises the degree cap") {
  const std::string cmd = std::string("REGRADE_MAX_N=7 ") + REGRADE_BIN +
                          " codim local:1,1 --max-n 7 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(out.find("\"n\": 7") != std::string::npos);
}

TEST_CASE("every builtin round trips through its JSON export") {
  const std::vector<std::string> specs = {
      "paperB",       "paperA2",           "pauli:2",
      "grassmann:2",  "local:2,2",         "twisted:standard:2",
      "twisted:pauli2", "tensor(twisted:pauli2,local:1,1)", "dsum(paperB,paperB)"};
  for (const std::string& spec : specs) {
    const RunResult exported = run_cli("algebra validate \"" + spec + "\" --json");
    REQUIRE(exported.exit_code == 0);
    const regrade::json file = first_json(exported.out)["file"];
    const std::string path = "/tmp/regrade_roundtrip.json";
    std::ofstream(path) << file.dump();
    const RunResult reimported = run_cli("algebra validate " + path + " --json");
    REQUIRE(reimported.exit_code == 0);
    CHECK(first_json(reimported.out)["file"] == file);
  }
}

TEST_CASE("invalid pairing tables exit 1 with a violation report") {
  const std::string path = "/tmp/regrade_bad_pairing.json";
  std::ofstream(path) << R"({"group":{"moduli":[2]},"kind":"bicharacter",
                            "table":[[1,1],[1,2]]})";
  const RunResult r = run_cli("pairing check " + path);
  CHECK(r.exit_code == 1);
  const regrade::json j = first_json(r.out);
  CHECK(j["valid"] == false);
  const std::string bad = "/tmp/regrade_bad_json.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run_cli("pairing check " + bad).exit_code == 2);
}

TEST_CASE("decimal flag adds approximations") {
  const RunResult r = run_cli("--decimal regular check twisted:standard:2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("det_approx") != std::string::npos);
}

}  // TEST_SUITE
