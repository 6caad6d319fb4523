#include "kount/io.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(KOUNT_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path tmp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kount_cli_" + name);
}

}  // namespace

TEST_CASE("gen prints the complex summary", "[cli]") {
  const auto r = run_cli("gen --star 3");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "n=7 f=(4,3) chi=1\n");
}

TEST_CASE("gen writes canonical complex JSON", "[cli]") {
  const auto out = tmp_path("star3.json");
  const auto r = run_cli("gen --star 3 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(kount::test::read_file(out.string()) ==
          R"({"sets":[[1],[2],[3],[4],[1,2],[1,3],[1,4]]})" "\n");
}

TEST_CASE("gen --random is deterministic for a fixed seed", "[cli]") {
  const auto a = tmp_path("r1.json"), b = tmp_path("r2.json");
  REQUIRE(run_cli("gen --random 6 9 --seed 1 --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli("gen --random 6 9 --seed 1 --out " + b.string()).exit_code == 0);
  REQUIRE(kount::test::read_file(a.string()) == kount::test::read_file(b.string()));
  REQUIRE(kount::test::read_file(a.string()) ==
          kount::test::read_file(kount::test::golden_path("random_6_9_seed1.json")));
}

TEST_CASE("gen --whitney builds the cycle complex from a graph file", "[cli]") {
  const auto graph = tmp_path("c4_graph.json");
  kount::io::write_file(graph.string(),
                        R"({"vertices": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]})");
  const auto r = run_cli("gen --whitney " + graph.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "n=8 f=(4,4) chi=0\n");
}

TEST_CASE("matrix emits the committed star-3 golden byte for byte", "[cli][golden]") {
  const auto out = tmp_path("star3_K.json");
  REQUIRE(run_cli("matrix --star 3 --which K --out " + out.string()).exit_code == 0);
  REQUIRE(kount::test::read_file(out.string()) ==
          kount::test::read_file(kount::test::golden_path("star3_K.json")));
}

TEST_CASE("matrix kinds", "[cli]") {
  SECTION("Kinv of star-3 starts with the printed first row") {
    const auto r = run_cli("matrix --star 3 --which Kinv --format csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.substr(0, r.out.find('\n')) == "4,1,1,1,-1,-1,-1");
  }
  SECTION("Q of the point complex is [[0]]") {
    const auto r = run_cli("matrix --generators 1 --which Q --format csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "0\n");
  }
  SECTION("Lt at t=2 of the point complex is [[-2]]") {
    const auto r = run_cli("matrix --generators 1 --which Lt --t 2 --format csv");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "-2\n");
  }
  SECTION("connection matrices of CW files are an input error") {
    const auto cw = tmp_path("disc.json");
    REQUIRE(run_cli("gen --star 3 --out " + tmp_path("s3.json").string()).exit_code == 0);
    REQUIRE(run_cli("gen --attach-all " + tmp_path("s3.json").string() + " --out " + cw.string())
                .exit_code == 0);
    REQUIRE(run_cli("matrix --in " + cw.string() + " --which L").exit_code == 2);
  }
}

TEST_CASE("verify exits 0 on the worked examples", "[cli]") {
  REQUIRE(run_cli("verify --star 3").exit_code == 0);
  REQUIRE(run_cli("verify --cycle 4 --json").exit_code == 0);
}

TEST_CASE("verify accepts CW files and passes on the attached-cell examples", "[cli]") {
  const auto oct = tmp_path("oct.json"), occ = tmp_path("occ.json");
  REQUIRE(run_cli("gen --cross-polytope 2 --out " + oct.string()).exit_code == 0);
  const auto gen = run_cli("gen --attach-all " + oct.string() + " --out " + occ.string());
  REQUIRE(gen.exit_code == 0);
  REQUIRE(gen.out == "n=27 f=(6,12,8,1) chi=3\n");
  REQUIRE(run_cli("verify --in " + occ.string()).exit_code == 0);
}

TEST_CASE("verify exits 1 and names the first failing check", "[cli]") {
  // an impossible tolerance forces the zeta reflection residual to fail
  const auto r = run_cli("verify --star 3 --tol 1e-30");
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.out.find("first failing check: zeta_reflection") != std::string::npos);
}

TEST_CASE("malformed input exits 2, never crashes", "[cli]") {
  const auto bad = tmp_path("bad.json");
  SECTION("non-closed set list") {
    kount::io::write_file(bad.string(), R"({"sets": [[1],[1,2],[2,3]]})");
    REQUIRE(run_cli("verify --in " + bad.string()).exit_code == 2);
  }
  SECTION("broken JSON") {
    kount::io::write_file(bad.string(), "{oops");
    REQUIRE(run_cli("verify --in " + bad.string()).exit_code == 2);
  }
  SECTION("missing file") {
    REQUIRE(run_cli("verify --in /nonexistent/nowhere.json").exit_code == 2);
  }
  SECTION("unknown matrix kind") {
    REQUIRE(run_cli("matrix --star 3 --which Z").exit_code == 2);
  }
  SECTION("no source") {
    REQUIRE(run_cli("gen").exit_code == 2);
  }
}

TEST_CASE("zeta grids regenerate byte-identically", "[cli]") {
  const auto a = tmp_path("za.csv"), b = tmp_path("zb.csv");
  const std::string flags = "zeta --star 3 --re-min -1 --re-max 1 --im-max 2 --step 0.25 --out ";
  REQUIRE(run_cli(flags + a.string()).exit_code == 0);
  REQUIRE(run_cli(flags + b.string()).exit_code == 0);
  const auto text = kount::test::read_file(a.string());
  REQUIRE(text == kount::test::read_file(b.string()));
  REQUIRE(text.substr(0, text.find('\n')) == "re,im,abs,arg");
}

TEST_CASE("spectrum of C4 matches the reference eigenvalues", "[cli]") {
  const auto r = run_cli("spectrum --cycle 4");
  REQUIRE(r.exit_code == 0);
  const auto j = kount::io::parse_json(r.out);
  const auto ev = j.at("eigenvalues").get<std::vector<double>>();
  REQUIRE(ev.size() == 8);
  REQUIRE(std::abs(ev.front() - (3 - 2 * std::sqrt(2.0))) < 1e-9);
  REQUIRE(std::abs(ev.back() - (3 + 2 * std::sqrt(2.0))) < 1e-9);
}

TEST_CASE("ring product report on edge x edge", "[cli]") {
  const auto edge = tmp_path("edge.json");
  REQUIRE(run_cli("gen --generators 1,2 --out " + edge.string()).exit_code == 0);
  const auto r = run_cli("ring --op product " + edge.string() + " " + edge.string());
  REQUIRE(r.exit_code == 0);
  const auto j = kount::io::parse_json(r.out);
  bool found = false;
  for (const auto& item : j) {
    if (item.at("op") == "product_vs_kronecker") {
      found = true;
      REQUIRE(item.at("pass") == false);
      REQUIRE_FALSE(item.at("first_diff").is_null());
    }
  }
  REQUIRE(found);
}
