// toric-mcm: command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/toric_mcm.h"

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kCap = 3, kInternal = 4 };

struct Options {
  std::string problem_path;
  std::string format = "table";
  std::optional<unsigned> jobs;
  std::size_t max_rays = 12;
  std::size_t max_rank = 6;
  std::size_t max_box = 5;
  std::optional<std::string> divisor;
  std::optional<std::string> ideal;
  std::optional<unsigned long long> characteristic;
  std::string degree;
  std::size_t box = 3;
  std::string report_path;
};

int exit_for(toric_status s) {
  switch (s) {
    case TORIC_OK: return kOk;
    case TORIC_ERR_PARSE:
    case TORIC_ERR_VALIDATION:
    case TORIC_ERR_INVALID_ARGUMENT: return kInvalid;
    case TORIC_ERR_CAP_EXCEEDED: return kCap;
    default: return kInternal;
  }
}

int fail(toric_status s) {
  std::cerr << "error: " << toric_status_name(s) << ": " << toric_last_error() << "\n";
  return exit_for(s);
}

std::optional<std::string> read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string labels(const Json& rays) {
  std::string s = "{";
  for (std::size_t i = 0; i < rays.size(); ++i) s += (i ? "," : "") + scalar(rays[i]);
  return s + "}";
}

std::string point(const Json& v) {
  if (v.is_null()) return "-";
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar(v[i]);
  return s + ")";
}

std::string dims(const Json& g) {
  std::string s = "[";
  const auto& d = g["dims"];
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + scalar(d[i]);
  return s + "]";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string yes(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

void print_header(const Json& r) {
  const auto& in = r["input"];
  std::cout << "cone: rank " << scalar(in["rank"]) << ", " << in["rays"].size() << " rays";
  if (r["command"] != "faces") {
    std::cout << "; divisor " << point(in["divisor"]) << "; ideal "
              << (in["ideal"].is_string() ? std::string("maximal")
                                          : std::to_string(in["ideal"]["generators"].size()) + " generators")
              << "; characteristic " << scalar(in["characteristic"]);
  }
  std::cout << "\n";
}

void render(const Json& r) {
  const std::string command = r["command"];
  if (command == "verify") {
    for (const auto& c : r["checks"])
      std::cout << (c["ok"].get<bool>() ? "ok    " : "FAIL  ") << scalar(c["name"])
                << (c.contains("detail") ? "  " + scalar(c["detail"]) : "") << "\n";
    std::cout << "verified: " << (r["verified"].get<bool>() ? "true" : "false") << "\n";
    return;
  }
  print_header(r);
  if (command == "faces") {
    std::cout << "dim  rays\n";
    for (const auto& f : r["faces"]) std::cout << pad(scalar(f["dim"]), 5) << labels(f["rays"]) << "\n";
    std::cout << "facets:\n";
    for (const auto& f : r["facets"]) std::cout << "  " << pad(labels(f["rays"]), 16) << "normal " << point(f["normal"]) << "\n";
  } else if (command == "support") {
    std::cout << "support:";
    for (const auto& f : r["support"]) std::cout << " " << labels(f);
    std::cout << "\n";
  } else if (command == "cosupport") {
    if (r["void"].get<bool>()) std::cout << "cosupport: void complex\n";
    else {
      std::cout << "cosupport faces:";
      for (const auto& f : r["faces"]) std::cout << " " << labels(f);
      std::cout << "\n";
    }
    std::cout << "reduced cohomology from degree " << scalar(r["cohomology"]["min_degree"]) << ": "
              << dims(r["cohomology"]) << "\n";
  } else if (command == "chambers") {
    std::cout << pad("pi", 16) << pad("strict", 8) << pad("semi", 6) << pad("witness", 18) << pad("rec", 5)
              << pad("bounded", 9) << pad("meet", 6) << "H~(pi cap xi) from -1\n";
    for (const auto& c : r["chambers"])
      std::cout << pad(labels(c["pi"]), 16) << pad(yes(c["strict_nonempty"]), 8) << pad(yes(c["semistrict_nonempty"]), 6)
                << pad(point(c["lattice_witness"]), 18) << pad(scalar(c["recession_dim"]), 5) << pad(yes(c["bounded"]), 9)
                << pad(yes(c["cones_intersect"]), 6) << dims(c["cohomology"]) << "\n";
    const auto& s = r["summary"];
    std::cout << "strict nonempty: " << scalar(s["strict_nonempty"]) << " of " << scalar(s["subsets"])
              << "; bounded nonempty:";
    for (const auto& b : s["bounded_nonempty"]) std::cout << " " << labels(b);
    if (s["bounded_nonempty"].empty()) std::cout << " none";
    std::cout << "\n";
  } else if (command == "cohomology") {
    std::cout << "degree " << point(r["degree"]) << ", sigma_m " << labels(r["sigma_m"]) << "\n";
    const auto& d = r["dims"]["dims"];
    for (std::size_t i = 0; i < d.size(); ++i) std::cout << "  H^" << i << ": " << scalar(d[i]) << "\n";
  } else if (command == "depth") {
    std::cout << "depth " << scalar(r["depth"]) << " of " << scalar(r["input"]["rank"]) << " ("
              << (r["mcm"].get<bool>() ? "MCM" : "not MCM") << ")\n";
  } else if (command == "mcm check") {
    std::cout << "MCM: " << (r["mcm"].get<bool>() ? "true" : "false") << "\n";
    std::cout << pad("pi", 16) << pad("outcome", 18) << pad("degree", 8) << pad("witness", 18) << "search bound\n";
    for (const auto& rec : r["records"])
      std::cout << pad(labels(rec["pi"]), 16) << pad(scalar(rec["outcome"]), 18)
                << pad(rec["degree"].is_null() ? "-" : scalar(rec["degree"]), 8) << pad(point(rec["witness"]), 18)
                << (rec["search_bound"].is_null() ? "-" : scalar(rec["search_bound"])) << "\n";
  } else if (command == "mcm enumerate") {
    std::cout << "box " << scalar(r["coeff_bound"]) << ": " << scalar(r["divisors_searched"]) << " divisors, "
              << scalar(r["classes_searched"]) << " classes, " << r["mcm_classes"].size() << " MCM\n";
    for (const auto& c : r["mcm_classes"]) std::cout << "  " << point(c) << "\n";
  } else if (command == "singularity") {
    for (const auto& l : r["levels"]) {
      std::cout << "S_" << scalar(l["level"]) << ":";
      for (const auto& f : l["faces"]) std::cout << " " << labels(f);
      if (l["faces"].empty()) std::cout << " empty";
      std::cout << "\n";
    }
    std::cout << pad("face", 16) << pad("dim", 5) << "local depth\n";
    for (const auto& ld : r["local_depths"])
      std::cout << pad(labels(ld["face"]), 16) << pad(scalar(ld["dim"]), 5)
                << (ld["depth"].is_null() ? "-" : scalar(ld["depth"])) << "\n";
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("problem", o.problem_path, "problem file (- for stdin)")->required();
  sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--jobs", o.jobs, "worker threads (0: all cores)")->envname("TORIC_MCM_JOBS");
  sub->add_option("--max-rays", o.max_rays, "ray cap for 2^n sweeps");
  sub->add_option("--max-rank", o.max_rank, "lattice rank cap");
  sub->add_option("--max-box", o.max_box, "coefficient box cap for mcm enumerate");
  sub->add_option("--divisor", o.divisor, "override the divisor, e.g. 0,-2,0,0");
  sub->add_option("--ideal", o.ideal, "override the ideal: maximal or a JSON object");
  sub->add_option("--characteristic", o.characteristic, "override the field characteristic");
}

struct ProblemDeleter {
  void operator()(toric_problem* p) const { toric_problem_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Local cohomology and maximal Cohen-Macaulay checks for rank-one modules over toric rings");
  app.require_subcommand(1);
  Options o;

  auto* faces = app.add_subcommand("faces", "face lattice");
  auto* support = app.add_subcommand("support", "support of the ideal");
  auto* cosupport = app.add_subcommand("cosupport", "cosupport complex of the ideal");
  auto* chambers = app.add_subcommand("chambers", "classify all 2^n chambers");
  auto* cohomology = app.add_subcommand("cohomology", "graded local cohomology in one degree");
  cohomology->add_option("--degree", o.degree, "degree m, e.g. 0,1,-1")->required();
  auto* depth = app.add_subcommand("depth", "depth of R^D");
  auto* mcm = app.add_subcommand("mcm", "maximal Cohen-Macaulay certification");
  mcm->require_subcommand(1);
  auto* check = mcm->add_subcommand("check", "decide whether R^D is MCM");
  auto* enumerate = mcm->add_subcommand("enumerate", "MCM classes among divisors in a box");
  enumerate->add_option("--box", o.box, "coefficient bound");
  auto* singularity = app.add_subcommand("singularity", "singularity sets S_i");
  auto* verify = app.add_subcommand("verify", "re-verify a JSON report");
  verify->add_option("--report", o.report_path, "JSON report to verify")->required();

  for (auto* sub : {faces, support, cosupport, chambers, cohomology, depth, check, enumerate, singularity, verify})
    add_common(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  const auto text = read_text(o.problem_path);
  if (!text) {
    std::cerr << "error: cannot read " << o.problem_path << "\n";
    return kInvalid;
  }
  toric_limits limits;
  toric_limits_init(&limits);
  limits.max_rays = o.max_rays;
  limits.max_rank = o.max_rank;
  limits.max_box = o.max_box;
  if (o.jobs) limits.jobs = *o.jobs;

  toric_problem* raw = nullptr;
  if (auto s = toric_problem_parse(text->c_str(), &limits, &raw); s != TORIC_OK) return fail(s);
  std::unique_ptr<toric_problem, ProblemDeleter> problem(raw);
  if (o.divisor)
    if (auto s = toric_problem_set_divisor(problem.get(), o.divisor->c_str()); s != TORIC_OK) return fail(s);
  if (o.ideal)
    if (auto s = toric_problem_set_ideal(problem.get(), o.ideal->c_str()); s != TORIC_OK) return fail(s);
  if (o.characteristic)
    if (auto s = toric_problem_set_characteristic(problem.get(), *o.characteristic); s != TORIC_OK) return fail(s);

  char* out = nullptr;
  toric_status s = TORIC_OK;
  int verified = 1;
  if (*faces) s = toric_faces(problem.get(), &out);
  else if (*support) s = toric_support(problem.get(), &out);
  else if (*cosupport) s = toric_cosupport(problem.get(), &out);
  else if (*chambers) s = toric_chambers(problem.get(), &out);
  else if (*cohomology) s = toric_cohomology(problem.get(), o.degree.c_str(), &out);
  else if (*depth) s = toric_depth(problem.get(), &out);
  else if (*check) s = toric_mcm_check(problem.get(), &out);
  else if (*enumerate) s = toric_mcm_enumerate(problem.get(), o.box, &out);
  else if (*singularity) s = toric_singularity(problem.get(), &out);
  else if (*verify) {
    const auto report = read_text(o.report_path);
    if (!report) {
      std::cerr << "error: cannot read " << o.report_path << "\n";
      return kInvalid;
    }
    s = toric_verify(problem.get(), report->c_str(), &verified, &out);
  }
  if (s != TORIC_OK) return fail(s);

  const std::string json(out);
  toric_string_free(out);
  if (o.format == "json") std::cout << json;
  else render(Json::parse(json));
  return verified ? kOk : kVerifyFailed;
}
