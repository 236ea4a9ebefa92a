#include <sys/wait.h>  // for WEXITSTATUS

#include <algorithm>   // for count
#include <cstdio>      // for popen, pclose
#include <filesystem>  // for remove_all, exists
#include <fstream>     // for ifstream, ofstream
#include <sstream>     // for stringstream
#include <string>      // for string

#include "catch_amalgamated.hpp"  // for TEST_CASE, REQUIRE, ...

namespace {
  struct Run {
    int         code = -1;
    std::string out;
  };

  Run run(std::string const& args, std::string const& env = "") {
    std::string const cmd = env + " " + SGFORGE_CLI + " " + args + " 2>/dev/null";
    Run               r;
    FILE*             pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t n = std::fread(buf, 1, sizeof(buf), pipe)) {
      r.out.append(buf, n);
    }
    r.code = WEXITSTATUS(::pclose(pipe));
    return r;
  }

  std::string slurp(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  size_t lines(std::string const& s) {
    return std::count(s.begin(), s.end(), '\n');
  }
}  // namespace

TEST_CASE("build", "[cli]") {
  auto const r = run("build --name O --k 2 --print-table");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "2 2 2\n0 1 2\n2 2 2\n");
  auto const j = run("build --name B2");
  REQUIRE(j.code == 0);
  REQUIRE(j.out.find("\"order\":5") != std::string::npos);
  REQUIRE(run("build --name Q9").code == 2);
  REQUIRE(run("build --name O --k 1").code == 2);
}

TEST_CASE("check", "[cli]") {
  std::string const p = "\"((xy)^w (yx)^w (xy)^w)^w = (xy)^w\"";
  auto const        r = run("check --name B2 --pseudoidentity " + p);
  REQUIRE(r.code == 1);
  REQUIRE(r.out.find("violated") != std::string::npos);
  REQUIRE(r.out.find("x = 1, y = 4") != std::string::npos);
  REQUIRE(run("check --name B0 --pseudoidentity " + p).code == 0);
  REQUIRE(run("check --name L2 --identity \"xy = x\"").code == 0);
  REQUIRE(run("check --name l3 --local --pseudoidentity \"x^(w+1) = x\"").code == 0);
  REQUIRE(run("check --name B2 --identity \"x = (\"").code == 2);
  REQUIRE(run("check --table \"[[0,0],[0,1]]\" --identity \"x^2 = x\"").code == 0);
  REQUIRE(run("check --table \"[[1,0],[0,0]]\" --identity \"x^2 = x\"").code != 0);
  std::ofstream("cli_table.json") << "{\"table\": [[0,1],[1,0]]}";
  REQUIRE(run("check --table cli_table.json --identity \"x^2y = y\"").code == 0);
  REQUIRE(run("check --table cli_table.json --identity \"x^2 = x\"").code == 1);
}

TEST_CASE("divides, augment, rlm, hierarchy", "[cli]") {
  REQUIRE(run("divides --name N_2 --in-name A0").code == 0);
  REQUIRE(run("divides --name Z_3 --in-name Z_2").code == 1);
  auto const a = run("augment --name Z_2 --mode bar");
  REQUIRE(a.code == 0);
  REQUIRE(lines(a.out) == 4);
  REQUIRE(run("augment --name Z_2 --mode sideways").code == 2);
  REQUIRE(run("rlm --name R2").code == 0);
  auto const h = run("hierarchy --name Sl2 --pattern bar,flat --depth 2 --separate");
  REQUIRE(h.code == 0);
  REQUIRE(h.out.find("separated by xy = yx") != std::string::npos);
}

TEST_CASE("enumerate", "[cli]") {
  std::filesystem::remove_all("cli_out");
  std::filesystem::create_directories("cli_out");
  REQUIRE(run("enumerate --order 4 --mode equiv --out cli_out/a.jsonl").code == 0);
  REQUIRE(run("enumerate --order 4 --mode equiv --jobs 3 --out cli_out/b.jsonl").code == 0);
  auto const a = slurp("cli_out/a.jsonl");
  REQUIRE(lines(a) == 126);
  REQUIRE(a == slurp("cli_out/b.jsonl"));
  REQUIRE(run("enumerate --order 3 --mode iso --out cli_out/c.jsonl").code == 0);
  REQUIRE(lines(slurp("cli_out/c.jsonl")) == 24);
  REQUIRE(run("enumerate --order 4", "SGFORGE_MAX_ORDER=3").code == 2);
  REQUIRE(run("enumerate --order 3 --mode both").code == 2);
}

TEST_CASE("classify and report", "[cli]") {
  auto const c = run("classify --name B2");
  REQUIRE(c.code == 0);
  REQUIRE(c.out == "ji B2 via A22\n");
  REQUIRE(run("classify --name W").out == "non_ji via B13\n");
  std::filesystem::remove_all("cli_report");
  REQUIRE(run("report --out-dir cli_report/x --max-order 3").code == 0);
  auto const csv = slurp("cli_report/x/classification.csv");
  REQUIRE(lines(csv) == 23);
  REQUIRE(std::filesystem::exists("cli_report/x/summary.json"));
  REQUIRE(run("report --out-dir cli_report/y --max-order 3 --jobs 2").code == 0);
  REQUIRE(slurp("cli_report/y/classification.csv") == csv);
}

TEST_CASE("usage and catalog", "[cli]") {
  REQUIRE(run("").code == 2);
  REQUIRE(run("frobnicate").code == 2);
  REQUIRE(run("build --bogus-flag").code == 2);
  auto const v = run("verify-catalog");
  REQUIRE(v.code == 0);
  REQUIRE(v.out.find("catalog checks passed") != std::string::npos);
}
