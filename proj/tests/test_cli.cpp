#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CmdResult {
  int code;
  std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
// stderr carries only diagnostics (timing) and is dropped here.
CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(POTTS_ATLAS_BIN) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return CmdResult{WEXITSTATUS(status), std::move(out)};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

TEST_CASE("allowed-q") {
  SUBCASE("csv rows for max-m 3") {
    const auto r = run_cli("allowed-q --max-m 3 --format csv");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "n,m,case,q,q_approx");
    CHECK(lines[1] == "1,2,1,2,2");
    CHECK(lines[2] == "1,3,1,3,3");
    CHECK(lines[3] == "2,3,2,1,1");
  }
  SUBCASE("single row at max-m 2") {
    const auto r = run_cli("allowed-q --max-m 2 --format csv");
    REQUIRE(r.code == 0);
    CHECK(lines_of(r.out).size() == 2);
  }
  SUBCASE("usage error below 2") {
    CHECK(run_cli("allowed-q --max-m 1").code == 2);
  }
  SUBCASE("irrational q is serialized as a quoted coefficient vector") {
    const auto r = run_cli("allowed-q --max-m 4 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"zeta16:[") != std::string::npos);
  }
}

TEST_CASE("allowed-p") {
  SUBCASE("q = 3 physical rows") {
    const auto r = run_cli("allowed-p --n 1 --m 3 --format json");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["results"].size() == 4);
    std::vector<std::string> ps;
    for (const auto& row : doc["results"])
      ps.push_back(row["p"]["coeffs"][0].get<std::string>());
    CHECK(ps == std::vector<std::string>{"2", "1", "3", "3/2"});
  }
  SUBCASE("--all adds the p = 0 row") {
    const auto r = run_cli("allowed-p --n 1 --m 3 --all --format json");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["results"].size() == 5);
    CHECK(doc["results"][4]["physical"] == false);
    CHECK(doc["results"][4]["p"]["approx_re"] == 0.0);
  }
  SUBCASE("non-coprime pair is a usage error") {
    CHECK(run_cli("allowed-p --n 2 --m 4").code == 2);
  }
}

TEST_CASE("coeffs") {
  SUBCASE("q = 3, S1, M = 2 covers labels -1..4 with a vanishing top") {
    const auto r = run_cli("coeffs --n 1 --m 3 --series S1 --M 2 --format json");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["results"].size() == 6);
    CHECK(doc["results"][0]["label"] == -1);
    CHECK(doc["results"][5]["label"] == 4);
    CHECK(doc["results"][5]["kind"] == "rho");
    CHECK(doc["results"][5]["value"]["coeffs"][0] == "0");
    CHECK(doc["results"][0]["value"]["coeffs"][0] == "0");
  }
  SUBCASE("Case 2 table") {
    const auto r = run_cli("coeffs --n 2 --m 3 --series C2 --M 2 --format json");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["results"].size() == 3);
    CHECK(doc["results"][0]["label"] == -1);
    CHECK(doc["results"][2]["label"] == 1);
  }
  SUBCASE("series/case mismatch is a usage error") {
    CHECK(run_cli("coeffs --n 1 --m 3 --series C2 --M 1").code == 2);
    CHECK(run_cli("coeffs --n 2 --m 3 --series S1 --M 1").code == 2);
  }
  SUBCASE("series index bounds") {
    CHECK(run_cli("coeffs --n 1 --m 3 --series S1 --M 0").code == 2);
    CHECK(run_cli("coeffs --n 1 --m 3 --series S1 --M 3").code == 2);
    CHECK(run_cli("coeffs --n 1 --m 3 --series S2 --M 0").code == 0);
  }
  SUBCASE("explicit sub-range") {
    const auto r =
        run_cli("coeffs --n 1 --m 3 --series S1 --M 2 --range 0..2 --format csv");
    REQUIRE(r.code == 0);
    CHECK(lines_of(r.out).size() == 4);  // header + labels 0,1,2
  }
  SUBCASE("malformed range") {
    CHECK(run_cli("coeffs --n 1 --m 3 --series S1 --M 2 --range 2-4").code == 2);
    CHECK(run_cli("coeffs --n 1 --m 3 --series S1 --M 2 --range 4..2").code == 2);
  }
}

TEST_CASE("exponents") {
  const auto r13 = run_cli("exponents --n 1 --m 3 --format json");
  REQUIRE(r13.code == 0);
  const json d13 = json::parse(r13.out)["results"][0];
  CHECK(d13["disc_degree"] == 27);
  CHECK(d13["critical_exponent"] == "5/6");
  CHECK(d13["string_exponent"] == "-1/5");

  const json d23 =
      json::parse(run_cli("exponents --n 2 --m 3 --format json").out)["results"][0];
  CHECK(d23["disc_degree"] == 5);
  CHECK(d23["critical_exponent"] == "2/3");
  CHECK(d23["string_exponent"] == "-1/2");

  const json d12 =
      json::parse(run_cli("exponents --n 1 --m 2 --format json").out)["results"][0];
  CHECK(d12["disc_degree"] == 10);
  CHECK(d12["critical_exponent"] == "3/4");
  CHECK(d12["string_exponent"] == "-1/3");
}

TEST_CASE("scan") {
  SUBCASE("target 3 up to m = 20") {
    const auto r = run_cli("scan --max-m 20 --target 3 --format json");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["results"].size() == 1);
    CHECK(doc["results"][0]["n"] == 1);
    CHECK(doc["results"][0]["m"] == 3);
    CHECK(doc["results"][0]["series"] == "S2");
    CHECK(doc["results"][0]["M"] == 0);
    CHECK(doc["summary"]["pairs_scanned"].get<int>() > 100);
  }
  SUBCASE("worker count does not change stdout") {
    const auto a = run_cli("scan --max-m 25 --target 2 --jobs 1 --format csv");
    const auto b = run_cli("scan --max-m 25 --target 2 --jobs 4 --format csv");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
  }
  SUBCASE("usage errors") {
    CHECK(run_cli("scan --max-m 0 --target 3").code == 2);
    CHECK(run_cli("scan --max-m 10 --target 1").code == 2);
  }
}

TEST_CASE("duality words") {
  SUBCASE("verify passes at length 8") {
    const auto r = run_cli("duality words --length 8 --verify");
    REQUIRE(r.code == 0);
    CHECK(r.out == "PASS 6561 strings\n");
  }
  SUBCASE("listing length 3") {
    const auto r = run_cli("duality words --length 3 --format csv");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 5);  // header + 4 words (+ count line)
    CHECK(lines[1] == "0,X X X");
  }
  SUBCASE("verify cap is 12") {
    CHECK(run_cli("duality words --length 20 --verify").code == 2);
    CHECK(run_cli("duality words --length 13 --verify").code == 2);
  }
  SUBCASE("verify of the empty length is trivial") {
    const auto r = run_cli("duality words --length 0 --verify");
    CHECK(r.code == 0);
    CHECK(r.out == "PASS 1 strings\n");
  }
  SUBCASE("listing cap is 14") {
    CHECK(run_cli("duality words --length 15").code == 2);
  }
}

TEST_CASE("duality beta") {
  SUBCASE("near the Ising self-dual point") {
    const auto r =
        run_cli("duality beta --model ising --beta 0.4406868 --format json");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out)["results"][0];
    CHECK(std::abs(doc["beta_dual"].get<double>() - 0.4406868) < 1e-6);
    CHECK(doc["involution_residual"].get<double>() < 1e-6);
  }
  SUBCASE("potts3 involution") {
    const auto r =
        run_cli("duality beta --model potts3 --beta 1.25 --format json");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out)["results"][0];
    CHECK(doc["involution_residual"].get<double>() < 1e-12);
    CHECK(doc.contains("c"));
  }
  SUBCASE("bad model or beta") {
    CHECK(run_cli("duality beta --model xy --beta 1.0").code == 2);
    CHECK(run_cli("duality beta --model ising --beta -1").code == 2);
  }
}

TEST_CASE("json output round-trips byte-identically") {
  for (const std::string args :
       {std::string("allowed-q --max-m 5 --format json"),
        std::string("allowed-p --n 1 --m 4 --all --format json"),
        std::string("coeffs --n 1 --m 3 --series S2 --M 1 --format json"),
        std::string("exponents --n 3 --m 5 --format json"),
        std::string("scan --max-m 12 --target 2 --format json")}) {
    const auto r = run_cli(args);
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("runs are deterministic") {
  const auto a = run_cli("allowed-p --n 1 --m 5 --all --format json");
  const auto b = run_cli("allowed-p --n 1 --m 5 --all --format json");
  CHECK(a.out == b.out);
}

TEST_CASE("usage reporting") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("allowed-q").code == 2);  // missing required flag
  CHECK(run_cli("allowed-q --max-m 3 --format yaml").code == 2);
}
