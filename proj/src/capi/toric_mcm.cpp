#include "toric/toric_mcm.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "io/problem.hpp"
#include "io/report.hpp"
#include "toric/error.hpp"

struct toric_problem {
  toric::io::Problem problem;
  toric::io::Limits limits;
};

namespace {

thread_local std::string last_error;

toric_status status_of(toric::ErrorCode code) {
  switch (toric::category(code)) {
    case toric::ErrorCategory::Parse: return TORIC_ERR_PARSE;
    case toric::ErrorCategory::Cap: return TORIC_ERR_CAP_EXCEEDED;
    default: return TORIC_ERR_VALIDATION;
  }
}

template <class F>
toric_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TORIC_OK;
  } catch (const toric::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TORIC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TORIC_ERR_INTERNAL;
  }
}

toric_status invalid_argument(const char* message) {
  last_error = message;
  return TORIC_ERR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

toric::IntVector parse_vector(const char* text, const char* what) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '[') return toric::io::to_vector(toric::io::parse_json(s), what);
  toric::IntVector out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw toric::Error(toric::ErrorCode::ParseError, std::string(what) + ": empty entry");
    try {
      out.push_back(toric::parse_integer(item.substr(b, e - b + 1)));
    } catch (const std::invalid_argument&) {
      throw toric::Error(toric::ErrorCode::ParseError, std::string(what) + ": not an integer: " + item);
    }
  }
  if (out.empty()) throw toric::Error(toric::ErrorCode::ParseError, std::string(what) + ": no entries");
  return out;
}

template <class Build>
toric_status report(const toric_problem* problem, char** out, Build&& build) {
  if (!problem || !out) return invalid_argument("null argument");
  *out = nullptr;
  return guarded([&] { *out = copy_out(toric::io::dump(build(*problem))); });
}

}  // namespace

extern "C" {

void toric_limits_init(toric_limits* limits) {
  if (!limits) return;
  const toric::io::Limits d;
  limits->max_rays = d.max_rays;
  limits->max_rank = d.max_rank;
  limits->max_box = d.max_box;
  limits->jobs = d.jobs;
}

toric_status toric_problem_parse(const char* text, const toric_limits* limits, toric_problem** out) {
  if (!text || !out) return invalid_argument("null argument");
  *out = nullptr;
  toric::io::Limits l;
  if (limits) l = toric::io::Limits{limits->max_rays, limits->max_rank, limits->max_box, limits->jobs};
  return guarded([&] { *out = new toric_problem{toric::io::parse_problem(text, l), l}; });
}

void toric_problem_free(toric_problem* problem) { delete problem; }

toric_status toric_problem_set_divisor(toric_problem* problem, const char* divisor) {
  if (!problem || !divisor) return invalid_argument("null argument");
  return guarded([&] {
    toric::Divisor d{parse_vector(divisor, "divisor")};
    toric::check_divisor(problem->problem.cone, d);
    problem->problem.divisor = std::move(d);
  });
}

toric_status toric_problem_set_ideal(toric_problem* problem, const char* ideal) {
  if (!problem || !ideal) return invalid_argument("null argument");
  return guarded([&] {
    const std::string s(ideal);
    problem->problem.ideal = s == "maximal" ? toric::MonomialIdeal::maximal()
                                            : toric::io::to_ideal(toric::io::parse_json(s), problem->problem.cone);
  });
}

toric_status toric_problem_set_characteristic(toric_problem* problem, unsigned long long characteristic) {
  if (!problem) return invalid_argument("null argument");
  return guarded([&] { problem->problem.field = toric::FieldSpec(characteristic); });
}

toric_status toric_faces(const toric_problem* problem, char** out) {
  return report(problem, out, [](const toric_problem& p) { return toric::io::faces_report(p.problem); });
}

toric_status toric_support(const toric_problem* problem, char** out) {
  return report(problem, out, [](const toric_problem& p) { return toric::io::support_report(p.problem); });
}

toric_status toric_cosupport(const toric_problem* problem, char** out) {
  return report(problem, out, [](const toric_problem& p) { return toric::io::cosupport_report(p.problem); });
}

toric_status toric_chambers(const toric_problem* problem, char** out) {
  return report(problem, out, [](const toric_problem& p) { return toric::io::chambers_report(p.problem, p.limits); });
}

toric_status toric_cohomology(const toric_problem* problem, const char* degree, char** out) {
  if (!degree) return invalid_argument("null argument");
  return report(problem, out, [&](const toric_problem& p) {
    return toric::io::cohomology_report(p.problem, parse_vector(degree, "degree"));
  });
}

toric_status toric_depth(const toric_problem* problem, char** out) {
  return report(problem, out, [](const toric_problem& p) { return toric::io::depth_report(p.problem, p.limits); });
}

toric_status toric_mcm_check(const toric_problem* problem, char** out) {
  return report(problem, out, [](const toric_problem& p) { return toric::io::mcm_check_report(p.problem, p.limits); });
}

toric_status toric_mcm_enumerate(const toric_problem* problem, size_t coeff_bound, char** out) {
  return report(problem, out, [&](const toric_problem& p) {
    return toric::io::mcm_enumerate_report(p.problem, coeff_bound, p.limits);
  });
}

toric_status toric_singularity(const toric_problem* problem, char** out) {
  return report(problem, out, [](const toric_problem& p) { return toric::io::singularity_report(p.problem, p.limits); });
}

toric_status toric_verify(const toric_problem* problem, const char* report_text, int* verified, char** out) {
  if (!report_text || !verified) return invalid_argument("null argument");
  *verified = 0;
  return report(problem, out, [&](const toric_problem& p) {
    auto result = toric::io::verify_report(p.problem, toric::io::parse_json(report_text), p.limits);
    *verified = result["verified"].get<bool>() ? 1 : 0;
    return result;
  });
}

void toric_string_free(char* s) { std::free(s); }

const char* toric_last_error(void) { return last_error.c_str(); }

const char* toric_status_name(toric_status status) {
  switch (status) {
    case TORIC_OK: return "OK";
    case TORIC_ERR_PARSE: return "ParseError";
    case TORIC_ERR_VALIDATION: return "ValidationError";
    case TORIC_ERR_CAP_EXCEEDED: return "CapExceeded";
    case TORIC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case TORIC_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

}  // extern "C"
