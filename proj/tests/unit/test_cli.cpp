#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + TORIC_MCM_BIN + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string problem(const char* name) { return std::string(TORIC_PROBLEMS_DIR) + "/" + name; }

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++k;
  return k;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(TORIC_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("mcm check on the four-ray cone") {
  const auto four = problem("four_ray.json");
  auto r = run("mcm check " + four + " --divisor 0,-1,0,0");
  CHECK(r.code == 0);
  CHECK(r.out.find("MCM: true") != std::string::npos);
  r = run("mcm check " + four + " --divisor 0,-2,0,0 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mcm"] == false);
  CHECK(j["violation"]["pi"] == nlohmann::json::array({2, 4}));
}

TEST_CASE("chambers table") {
  auto r = run("chambers " + problem("four_ray.json") + " --divisor 0,-2,0,0");
  CHECK(r.code == 0);
  // one "yes" in the strict column per strict-nonempty row
  std::size_t strict_rows = 0;
  std::size_t pos = r.out.find('\n', r.out.find("pi "));
  for (std::size_t line = 0; line < 16; ++line) {
    const auto end = r.out.find('\n', pos + 1);
    const auto row = r.out.substr(pos + 1, end - pos - 1);
    strict_rows += row.substr(16, 3) == "yes";
    pos = end;
  }
  CHECK(strict_rows == 15);
  CHECK(r.out.find("strict nonempty: 15 of 16; bounded nonempty: {2,4}") != std::string::npos);
}

TEST_CASE("cohomology in one degree") {
  auto r = run("cohomology --degree 0,1,-1 " + problem("four_ray.json") + " --ideal maximal");
  CHECK(r.code == 0);
  CHECK(r.out.find("H^2: 1") != std::string::npos);
  CHECK(count(r.out, ": 0\n") == 5);
}

TEST_CASE("json output is byte-stable and round-trips through verify") {
  const auto four = problem("four_ray.json");
  for (const std::string cmd : {"faces", "support", "cosupport", "chambers", "depth", "mcm check", "mcm enumerate --box 2",
                                "singularity", "cohomology --degree 1,-1,0"}) {
    CAPTURE(cmd);
    const auto a = run(cmd + " " + four + " --format json");
    const auto b = run(cmd + " " + four + " --format json --jobs 1");
    const auto c = run(cmd + " " + four + " --format json", "TORIC_MCM_JOBS=2");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(nlohmann::json::parse(a.out).dump(2) + "\n" == a.out);
    const auto path = write_temp("report.json", a.out);
    const auto v = run("verify --report " + path + " " + four);
    CHECK(v.code == 0);
    CHECK(v.out.find("verified: true") != std::string::npos);
  }
}

TEST_CASE("verify failure exits 1") {
  const auto four = problem("four_ray.json");
  auto r = run("mcm check " + four + " --format json");
  auto j = nlohmann::json::parse(r.out);
  j["violation"]["witness"] = nlohmann::json::array({5, 5, 5});
  const auto path = write_temp("tampered.json", j.dump());
  auto v = run("verify --report " + path + " " + four);
  CHECK(v.code == 1);
  CHECK(v.out.find("verified: false") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto four = problem("four_ray.json");
  CHECK(run("faces " + write_temp("bad.json", "{\"lattice_rank\": 2, \"rays\": [[2,0],[0,1]]}")).code == 2);
  const auto syntax = run("faces " + write_temp("syntax.json", "{\"lattice_rank\": 2"));
  CHECK(syntax.code == 2);
  CHECK(syntax.out.find("ParseError") != std::string::npos);
  const auto validation = run("faces " + write_temp("bad.json", "{\"lattice_rank\": 2, \"rays\": [[2,0],[0,1]]}"));
  CHECK(validation.out.find("ValidationError") != std::string::npos);
  CHECK(validation.out.find("NotPrimitive") != std::string::npos);
  CHECK(run("chambers " + four + " --divisor 1,2").code == 2);
  CHECK(run("faces /nonexistent/problem.json").code == 2);
  CHECK(run("frobnicate " + four).code == 2);
  CHECK(run("cohomology " + four).code == 2);

  const auto rays = run("chambers " + four + " --max-rays 3");
  CHECK(rays.code == 3);
  CHECK(rays.out.find("TooManyRays") != std::string::npos);
  CHECK(run("mcm enumerate --box 6 " + four).code == 3);
  CHECK(run("faces " + four + " --max-rank 2").code == 3);
  // 7^8 divisors in the box exceed the enumeration cap
  CHECK(run("mcm enumerate --box 3 " + problem("cube.json")).code == 3);
}

TEST_CASE("stdin input") {
  const auto r = run("depth - < " + problem("four_ray.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("depth 2 of 3 (not MCM)") != std::string::npos);
}
