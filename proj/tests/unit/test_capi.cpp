#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "toric/toric_mcm.h"

using Json = nlohmann::json;

namespace {

const char* kFourRay = R"({"lattice_rank": 3, "rays": [[1,0,0],[0,1,0],[-1,1,1],[0,0,1]], "divisor": [0,-2,0,0]})";

struct Problem {
  toric_problem* p = nullptr;
  explicit Problem(const char* text, const toric_limits* limits = nullptr) {
    REQUIRE(toric_problem_parse(text, limits, &p) == TORIC_OK);
  }
  ~Problem() { toric_problem_free(p); }
};

std::string take(char* s) {
  std::string out(s);
  toric_string_free(s);
  return out;
}

toric_status parse_status(const char* text, const toric_limits* limits = nullptr) {
  toric_problem* p = nullptr;
  const auto s = toric_problem_parse(text, limits, &p);
  if (s == TORIC_OK) toric_problem_free(p);
  else CHECK(p == nullptr);
  return s;
}

using Command = toric_status (*)(const toric_problem*, char**);

}  // namespace

TEST_CASE("limits and status names") {
  toric_limits l;
  toric_limits_init(&l);
  CHECK(l.max_rays == 12);
  CHECK(l.max_rank == 6);
  CHECK(l.max_box == 5);
  CHECK(l.jobs == 0);
  CHECK(std::string(toric_status_name(TORIC_ERR_VALIDATION)) == "ValidationError");
  CHECK(std::string(toric_status_name(TORIC_ERR_CAP_EXCEEDED)) == "CapExceeded");
  CHECK(std::string(toric_status_name(TORIC_ERR_PARSE)) == "ParseError");
}

TEST_CASE("problem parsing errors") {
  CHECK(parse_status(kFourRay) == TORIC_OK);
  CHECK(parse_status("{\"lattice_rank\": 2,") == TORIC_ERR_PARSE);
  CHECK(parse_status(R"({"lattice_rank": 2, "rays": [[1,0],[0,1.5]]})") == TORIC_ERR_PARSE);
  CHECK(parse_status(R"({"lattice_rank": 2, "lattice_rank": 2, "rays": [[1,0],[0,1]]})") == TORIC_ERR_PARSE);

  CHECK(parse_status(R"({"lattice_rank": 2, "rays": [[2,0],[0,1]]})") == TORIC_ERR_VALIDATION);
  CHECK(std::string(toric_last_error()).find("NotPrimitive") != std::string::npos);
  CHECK(parse_status(R"({"lattice_rank": 2, "rays": [[1,0],[-1,0],[0,1]]})") == TORIC_ERR_VALIDATION);
  CHECK(std::string(toric_last_error()).find("NotStrictlyConvex") != std::string::npos);
  CHECK(parse_status(R"({"lattice_rank": 2, "rays": [[1,0],[0,1]], "colour": 1})") == TORIC_ERR_VALIDATION);
  CHECK(parse_status(R"({"rays": [[1,0],[0,1]]})") == TORIC_ERR_VALIDATION);
  CHECK(parse_status(R"({"lattice_rank": 2, "rays": [[1,0],[0,1]], "divisor": [1]})") == TORIC_ERR_VALIDATION);
  CHECK(std::string(toric_last_error()).find("DimensionMismatch") != std::string::npos);
  CHECK(parse_status(R"({"lattice_rank": 2, "rays": [[1,0],[0,1]], "ideal": "minimal"})") == TORIC_ERR_VALIDATION);
  CHECK(parse_status(R"({"lattice_rank": 2, "rays": [[1,0],[0,1]], "ideal": {"generators": [[-1,0]]}})") ==
        TORIC_ERR_VALIDATION);
  CHECK(std::string(toric_last_error()).find("InvalidGenerator") != std::string::npos);
  CHECK(parse_status(R"({"lattice_rank": 2, "rays": [[1,0],[0,1]], "field": {"characteristic": 6}})") ==
        TORIC_ERR_VALIDATION);

  toric_limits l;
  toric_limits_init(&l);
  l.max_rank = 2;
  CHECK(parse_status(kFourRay, &l) == TORIC_ERR_CAP_EXCEEDED);
  CHECK(std::string(toric_last_error()).find("RankTooLarge") != std::string::npos);

  toric_problem* p = nullptr;
  CHECK(toric_problem_parse(nullptr, nullptr, &p) == TORIC_ERR_INVALID_ARGUMENT);
  CHECK(toric_problem_parse(kFourRay, nullptr, nullptr) == TORIC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("overrides") {
  Problem pr(kFourRay);
  CHECK(toric_problem_set_divisor(pr.p, "0, -1, 0, 0") == TORIC_OK);
  CHECK(toric_problem_set_divisor(pr.p, "[0, -1, 0, 0]") == TORIC_OK);
  CHECK(toric_problem_set_divisor(pr.p, "0,-1") == TORIC_ERR_VALIDATION);
  CHECK(toric_problem_set_divisor(pr.p, "0,x,0,0") == TORIC_ERR_PARSE);
  CHECK(toric_problem_set_divisor(pr.p, "") == TORIC_ERR_PARSE);
  CHECK(toric_problem_set_ideal(pr.p, R"({"generators": [[0,1,0]]})") == TORIC_OK);
  CHECK(toric_problem_set_ideal(pr.p, R"({"generators": [[1,0,0]]})") == TORIC_ERR_VALIDATION);
  CHECK(toric_problem_set_ideal(pr.p, "maximal") == TORIC_OK);
  CHECK(toric_problem_set_characteristic(pr.p, 4) == TORIC_ERR_VALIDATION);
  CHECK(toric_problem_set_characteristic(pr.p, 3) == TORIC_OK);
  CHECK(toric_problem_set_divisor(nullptr, "0") == TORIC_ERR_INVALID_ARGUMENT);

  char* out = nullptr;
  REQUIRE(toric_mcm_check(pr.p, &out) == TORIC_OK);
  const auto r = Json::parse(take(out));
  CHECK(r["mcm"] == true);
  CHECK(r["input"]["divisor"] == Json::array({0, -1, 0, 0}));
  CHECK(r["input"]["characteristic"] == 3);
}

TEST_CASE("every report re-parses, is stable, and verifies") {
  Problem pr(kFourRay);
  toric_limits one;
  toric_limits_init(&one);
  one.jobs = 1;
  Problem serial(kFourRay, &one);

  const std::vector<Command> commands{toric_faces, toric_support, toric_cosupport, toric_chambers,
                                      toric_depth, toric_mcm_check, toric_singularity};
  std::vector<std::string> reports;
  for (auto cmd : commands) {
    char* a = nullptr;
    char* b = nullptr;
    char* c = nullptr;
    REQUIRE(cmd(pr.p, &a) == TORIC_OK);
    REQUIRE(cmd(pr.p, &b) == TORIC_OK);
    REQUIRE(cmd(serial.p, &c) == TORIC_OK);
    const auto sa = take(a);
    CHECK(sa == take(b));
    CHECK(sa == take(c));
    CHECK(Json::parse(sa).dump(2) + "\n" == sa);
    reports.push_back(sa);
  }
  char* out = nullptr;
  REQUIRE(toric_cohomology(pr.p, "0,1,-1", &out) == TORIC_OK);
  reports.push_back(take(out));
  CHECK(Json::parse(reports.back())["dims"]["dims"] == Json::array({0, 0, 1, 0, 0, 0}));
  REQUIRE(toric_mcm_enumerate(pr.p, 2, &out) == TORIC_OK);
  reports.push_back(take(out));

  for (const auto& rep : reports) {
    int verified = 0;
    REQUIRE(toric_verify(pr.p, rep.c_str(), &verified, &out) == TORIC_OK);
    const auto v = Json::parse(take(out));
    CHECK_MESSAGE(verified == 1, v.dump());
    CHECK(v["verified"] == true);
  }
}

TEST_CASE("verify rejects tampering") {
  Problem pr(kFourRay);
  char* out = nullptr;
  REQUIRE(toric_mcm_check(pr.p, &out) == TORIC_OK);
  auto r = Json::parse(take(out));
  REQUIRE(r["mcm"] == false);
  r["violation"]["witness"] = Json::array({5, 5, 5});
  int verified = 1;
  REQUIRE(toric_verify(pr.p, r.dump().c_str(), &verified, &out) == TORIC_OK);
  toric_string_free(out);
  CHECK(verified == 0);

  REQUIRE(toric_chambers(pr.p, &out) == TORIC_OK);
  auto c = Json::parse(take(out));
  for (auto& row : c["chambers"])
    if (row["pi"] == Json::array({2, 4})) row["lattice_witness"] = Json::array({0, 0, 0});
  REQUIRE(toric_verify(pr.p, c.dump().c_str(), &verified, &out) == TORIC_OK);
  const auto v = Json::parse(take(out));
  CHECK(verified == 0);
  bool witness_failed = false;
  for (const auto& ch : v["checks"])
    if (ch["name"] == "witness {2,4}") witness_failed = ch["ok"] == false;
  CHECK(witness_failed);

  Problem other(R"({"lattice_rank": 3, "rays": [[1,0,0],[0,1,0],[0,0,1]]})");
  REQUIRE(toric_faces(pr.p, &out) == TORIC_OK);
  const auto faces = take(out);
  REQUIRE(toric_verify(other.p, faces.c_str(), &verified, &out) == TORIC_OK);
  toric_string_free(out);
  CHECK(verified == 0);

  CHECK(toric_verify(pr.p, "{\"command\": \"faces\"}", &verified, &out) == TORIC_ERR_VALIDATION);
  CHECK(toric_verify(pr.p, "not json", &verified, &out) == TORIC_ERR_PARSE);
}

TEST_CASE("arbitrary-precision integers survive the round trip") {
  const std::string big = "123456789012345678901234567890";
  const std::string text = R"({"lattice_rank": 2, "rays": [[1, 0], [)" + big + R"(, 1]], "divisor": [0, -)" + big + "]}";
  Problem pr(text.c_str());
  char* out = nullptr;
  REQUIRE(toric_faces(pr.p, &out) == TORIC_OK);
  const auto faces = take(out);
  const auto r = Json::parse(faces);
  CHECK(r["input"]["rays"][1][0] == big);
  CHECK(r["input"]["divisor"][1] == "-" + big);
  int verified = 0;
  REQUIRE(toric_verify(pr.p, faces.c_str(), &verified, &out) == TORIC_OK);
  toric_string_free(out);
  CHECK(verified == 1);

  REQUIRE(toric_mcm_check(pr.p, &out) == TORIC_OK);
  const auto mcm = take(out);
  CHECK(Json::parse(mcm)["mcm"] == true);  // two rays: a simplicial cone in rank 2
  REQUIRE(toric_verify(pr.p, mcm.c_str(), &verified, &out) == TORIC_OK);
  toric_string_free(out);
  CHECK(verified == 1);
}

TEST_CASE("caps") {
  Problem pr(kFourRay);
  char* out = nullptr;
  CHECK(toric_mcm_enumerate(pr.p, 6, &out) == TORIC_ERR_CAP_EXCEEDED);
  CHECK(out == nullptr);
  CHECK(std::string(toric_last_error()).find("SearchTooLarge") != std::string::npos);

  toric_limits l;
  toric_limits_init(&l);
  l.max_rays = 3;
  Problem tight(kFourRay, &l);
  CHECK(toric_chambers(tight.p, &out) == TORIC_ERR_CAP_EXCEEDED);
  CHECK(std::string(toric_last_error()).find("TooManyRays") != std::string::npos);
  CHECK(toric_faces(tight.p, &out) == TORIC_OK);
  toric_string_free(out);
  CHECK(std::string(toric_last_error()).empty());

  CHECK(toric_cohomology(pr.p, "1,2", &out) == TORIC_ERR_VALIDATION);
  CHECK(toric_faces(nullptr, &out) == TORIC_ERR_INVALID_ARGUMENT);
}
