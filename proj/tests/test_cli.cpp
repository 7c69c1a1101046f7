#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// Drives the installed binary end to end through fixture files; the test
// working directory is tests/, so fixture paths are relative.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
#ifdef CLI_BINARY_PATH
  return CLI_BINARY_PATH;
#else
  return "hexholes";
#endif
}

RunResult run(const std::string& args) {
  const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("closed-form count command") {
  const RunResult r = run("macmahon 2 2 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "20\n");
  CHECK(run("macmahon 4 4 4").out == "232848\n");
  CHECK(run("macmahon -1 1 1").exit_code == 2);
  CHECK(run("macmahon 1 1").exit_code == 2);  // missing argument
}

TEST_CASE("count command across methods") {
  const RunResult all = run("count --file fixtures/hexagon_222.json --method all");
  CHECK(all.exit_code == 0);
  CHECK(contains(all.out, "enumeration: 20\n"));
  CHECK(contains(all.out, "determinant: 20\n"));
  CHECK(contains(all.out, "lgv: 20\n"));
  CHECK_FALSE(contains(all.out, "DISAGREEMENT"));

  CHECK(run("count --file fixtures/h_2_1.json --method det").out == "determinant: 54\n");
  CHECK(run("count --file fixtures/h_2_1.json --method lgv").out == "lgv: 54\n");
  CHECK(run("count --file fixtures/l_main.json --method lgv").out == "lgv: 4000\n");
  CHECK(run("count --file fixtures/explicit_up.json").out == "determinant: 0\n");
  CHECK(run("count --file fixtures/snowflake_main.json --method det").out ==
        "determinant: 139252776960\n");
}

TEST_CASE("malformed input exits with the spec-error code") {
  CHECK(run("count --file fixtures/bad_label.json").exit_code == 2);
  CHECK(run("count --file fixtures/unknown_field.json").exit_code == 2);
  CHECK(run("count --file fixtures/no_such_file.json").exit_code == 2);
  CHECK(run("count --file fixtures/hexagon_222.json --method warp").exit_code == 2);
  CHECK(run("verify --file fixtures/hexagon_222.json").exit_code == 2);  // not a snowflake
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("verify command text report") {
  const RunResult r = run("verify --file fixtures/h_2_1.json --method enum --method det");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "count[enumeration] H=54 Hbar=54\n"));
  CHECK(contains(r.out, "count[determinant] H=54 Hbar=54\n"));
  CHECK(contains(r.out, "routes agree: yes\n"));
  CHECK(contains(r.out, "ratio measured:  1\n"));
  CHECK(contains(r.out, "check ratio:     PASS\n"));
  CHECK(contains(r.out, "check geometric: PASS\n"));
  CHECK(contains(r.out, "verdict: PASS\n"));

  const RunResult big = run("verify --file fixtures/snowflake_main.json");
  CHECK(big.exit_code == 0);
  CHECK(contains(big.out, "ratio measured:  3675/1024\n"));
  CHECK(contains(big.out, "ratio formula:   3675/1024\n"));
  CHECK(contains(big.out, "ratio geometric: 3675/1024\n"));
  CHECK(contains(big.out, "verdict: PASS\n"));

  const RunResult cyc = run("verify --file fixtures/cyclic_27.json");
  CHECK(cyc.exit_code == 0);
  CHECK(contains(cyc.out, "symmetry r: fixed H=3 Hbar=1 formula=1/3 PASS"));
}

TEST_CASE("verify command json report") {
  const RunResult r = run("verify --file fixtures/h_2_1.json --json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["routes_agree"] == true);
  CHECK(j["m_h"] == "54");
  CHECK(j["m_hbar"] == "54");
  CHECK(j["measured"] == "1");
  CHECK(j["formula"] == "1");
  CHECK(j["spec_h"]["n"] == 2);
  CHECK(j["spec_hbar"]["flipped"] == true);
  REQUIRE(j["symmetry"].is_array());
  CHECK(j["symmetry"][0]["class"] == "r");
  CHECK(j["symmetry"][0]["fixed_h"] == "6");
}

TEST_CASE("negative control flips the verdict") {
  // untouched, the fixture passes
  const RunResult good = run("verify --file fixtures/negative_control.json");
  CHECK(good.exit_code == 0);
  CHECK(contains(good.out, "verdict: PASS\n"));
  // displacing every hole outward by one step must be caught, non-vacuously
  const RunResult bad = run("verify --file fixtures/negative_control.json --negative-control");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "verdict: FAIL\n"));
  CHECK(contains(bad.out, "ratio measured:  2/3\n"));
  CHECK(contains(bad.out, "ratio formula:   1/2\n"));
  CHECK(contains(bad.out, "check ratio:     FAIL\n"));
}

TEST_CASE("render produces deterministic svg") {
  const std::string p1 = temp_path("hexholes_render_1.svg");
  const std::string p2 = temp_path("hexholes_render_2.svg");
  CHECK(run("render --file fixtures/snowflake_small.json --out " + p1 + " --labels").exit_code ==
        0);
  CHECK(run("render --file fixtures/snowflake_small.json --out " + p2 + " --labels").exit_code ==
        0);
  const std::string svg = slurp(p1);
  CHECK(svg == slurp(p2));
  CHECK(contains(svg, "<svg"));
  CHECK(contains(svg, "</svg>"));
  CHECK(svg == slurp("golden/snowflake_small.svg"));

  const std::string p3 = temp_path("hexholes_render_3.svg");
  CHECK(run("render --file fixtures/hexagon_222.json --out " + p3 + " --tiling 0").exit_code == 0);
  CHECK(slurp(p3) == slurp("golden/hexagon_222_tiling0.svg"));

  // tiling index beyond the region's tiling count
  CHECK(run("render --file fixtures/hexagon_222.json --out " + p3 + " --tiling 99").exit_code ==
        2);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  std::remove(p3.c_str());
}

TEST_CASE("sweep is reproducible") {
  const std::string args = "sweep --trials 3 --seed 7 --n-max 2 --x-max 1";
  const RunResult r1 = run(args);
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.out, "3/3 passed\n"));
  CHECK(run(args).out == r1.out);  // same seed, same transcript

  const RunResult rj = run(args + " --json");
  CHECK(rj.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(rj.out);
  CHECK(j["passed"] == 3);
  CHECK(j["failed"] == 0);
  CHECK(j["results"].size() == 3);

  CHECK(run("sweep --trials 2 --seed 3 --shape rv --method lgv").exit_code == 0);
}
