#include "report.hpp"

#include <string>
#include <utility>

#include "toric/cohomology_engine.hpp"
#include "toric/error.hpp"

namespace toric::io {

namespace {

Json dims_json(const GradedDims& g) {
  Json dims = Json::array();
  for (auto x : g.dims) dims.push_back(x);
  return Json{{"min_degree", g.min_degree}, {"dims", dims}};
}

Json faces_json(const FaceSet& faces) {
  Json out = Json::array();
  for (auto f : faces) out.push_back(from_rays(f));
  return out;
}

Json base(const char* command, const Problem& problem) {
  return Json{{"command", command}, {"input", input_json(problem)}};
}

Json optional_vector(const std::optional<IntVector>& v) { return v ? from_vector(*v) : Json(nullptr); }

Json record_json(const PiRecord& r) {
  return Json{{"pi", from_rays(r.pi)},
              {"outcome", to_string(r.outcome)},
              {"degree", r.degree ? Json(*r.degree) : Json(nullptr)},
              {"witness", optional_vector(r.witness)},
              {"search_bound", r.search_bound ? from_integer(*r.search_bound) : Json(nullptr)}};
}

std::optional<IntVector> optional_from(const Json& value, const std::string& what) {
  if (value.is_null()) return std::nullopt;
  return to_vector(value, what);
}

const Json& field_of(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key))
    throw Error(ErrorCode::InvalidInput, where + ": missing \"" + key + "\"");
  return object[key];
}

}  // namespace

Json input_json(const Problem& problem) {
  Json rays = Json::array();
  for (const auto& r : problem.cone.rays()) rays.push_back(from_vector(r));
  return Json{{"rank", problem.cone.rank()},
              {"rays", rays},
              {"divisor", from_vector(problem.divisor.coefficients)},
              {"ideal", from_ideal(problem.ideal)},
              {"characteristic", problem.field.characteristic()}};
}

Json faces_report(const Problem& problem) {
  const auto lattice = face_lattice(problem.cone);
  Json faces = Json::array();
  for (const auto& f : lattice.faces()) faces.push_back(Json{{"rays", from_rays(f.rays)}, {"dim", f.dim}});
  Json facets = Json::array();
  for (const auto& f : lattice.facets())
    facets.push_back(Json{{"rays", from_rays(f.rays)}, {"normal", from_vector(f.normal)}});
  Json out = base("faces", problem);
  out["faces"] = faces;
  out["facets"] = facets;
  return out;
}

Json support_report(const Problem& problem) {
  const auto lattice = face_lattice(problem.cone);
  Json out = base("support", problem);
  out["support"] = faces_json(support(problem.cone, lattice, problem.ideal));
  return out;
}

Json cosupport_report(const Problem& problem) {
  const auto lattice = face_lattice(problem.cone);
  const auto xi = cosupport(lattice, support(problem.cone, lattice, problem.ideal));
  Json faces = Json::array();
  for (auto f : xi.faces()) faces.push_back(from_rays(f));
  Json out = base("cosupport", problem);
  out["void"] = xi.is_void();
  out["faces"] = faces;
  out["cohomology"] = dims_json(reduced_cohomology_dims(xi, problem.field));
  return out;
}

Json chambers_report(const Problem& problem, const Limits& limits) {
  const auto lattice = face_lattice(problem.cone);
  const auto xi = cosupport(lattice, support(problem.cone, lattice, problem.ideal));
  const auto reports = enumerate_chambers(problem.cone, lattice, problem.divisor, xi, problem.field, limits.sweep());
  Json rows = Json::array();
  std::size_t strict = 0, semistrict = 0, lattice_points = 0;
  Json bounded = Json::array();
  for (const auto& r : reports) {
    strict += r.strict_nonempty;
    semistrict += r.semistrict_nonempty;
    lattice_points += r.lattice_witness.has_value();
    if (r.bounded && r.semistrict_nonempty) bounded.push_back(from_rays(r.pi));
    rows.push_back(Json{{"pi", from_rays(r.pi)},
                        {"strict_nonempty", r.strict_nonempty},
                        {"semistrict_nonempty", r.semistrict_nonempty},
                        {"lattice_witness", optional_vector(r.lattice_witness)},
                        {"recession_dim", r.recession_dim},
                        {"bounded", r.bounded},
                        {"cones_intersect", r.cones_intersect},
                        {"cohomology", dims_json(r.cohomology)}});
  }
  Json out = base("chambers", problem);
  out["chambers"] = rows;
  out["summary"] = Json{{"subsets", reports.size()},
                        {"strict_nonempty", strict},
                        {"semistrict_nonempty", semistrict},
                        {"with_lattice_point", lattice_points},
                        {"bounded_nonempty", bounded}};
  return out;
}

Json cohomology_report(const Problem& problem, const IntVector& degree) {
  const auto lattice = face_lattice(problem.cone);
  const auto r = graded_local_cohomology(problem.cone, lattice, problem.divisor, problem.ideal, degree, problem.field);
  Json out = base("cohomology", problem);
  out["degree"] = from_vector(r.degree);
  out["sigma_m"] = from_rays(r.sigma_m);
  out["dims"] = dims_json(r.dims);
  return out;
}

Json depth_report(const Problem& problem, const Limits& limits) {
  const auto lattice = face_lattice(problem.cone);
  const std::size_t k = depth(problem.cone, lattice, problem.divisor, problem.field, limits.sweep());
  Json out = base("depth", problem);
  out["depth"] = k;
  out["mcm"] = k == problem.cone.rank();
  return out;
}

Json mcm_check_report(const Problem& problem, const Limits& limits) {
  const auto lattice = face_lattice(problem.cone);
  const auto cert = mcm_check(problem.cone, lattice, problem.divisor, problem.field, limits.sweep());
  Json records = Json::array();
  for (const auto& r : cert.records) records.push_back(record_json(r));
  Json out = base("mcm check", problem);
  out["mcm"] = cert.mcm;
  out["violation"] = cert.violation ? record_json(*cert.violation) : Json(nullptr);
  out["records"] = records;
  return out;
}

Json mcm_enumerate_report(const Problem& problem, std::size_t coeff_bound, const Limits& limits) {
  const auto lattice = face_lattice(problem.cone);
  const auto e = mcm_enumerate(problem.cone, lattice, coeff_bound, problem.field, limits.sweep());
  Json classes = Json::array();
  for (const auto& c : e.mcm_classes) classes.push_back(from_vector(c.coefficients));
  Json out = base("mcm enumerate", problem);
  out["coeff_bound"] = e.coeff_bound;
  out["divisors_searched"] = e.divisors_searched;
  out["classes_searched"] = e.classes_searched;
  out["mcm_classes"] = classes;
  return out;
}

Json singularity_report(const Problem& problem, const Limits& limits) {
  const auto lattice = face_lattice(problem.cone);
  const auto s = singularity_sets(problem.cone, lattice, problem.divisor, problem.field, limits.sweep());
  Json levels = Json::array();
  for (std::size_t i = 0; i < s.levels.size(); ++i) levels.push_back(Json{{"level", i}, {"faces", faces_json(s.levels[i])}});
  Json local = Json::array();
  for (const auto& ld : s.local_depths) {
    const auto dim = lattice.face(ld.face).dim;
    local.push_back(Json{{"face", from_rays(ld.face)},
                         {"dim", dim},
                         {"depth", ld.depth ? Json(*ld.depth) : Json(nullptr)}});
  }
  Json out = base("singularity", problem);
  out["levels"] = levels;
  out["local_depths"] = local;
  return out;
}

Json verify_report(const Problem& problem, const Json& report, const Limits& limits) {
  Json checks = Json::array();
  bool all = true;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    all = all && ok;
    Json c{{"name", std::move(name)}, {"ok", ok}};
    if (!detail.empty()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
  };
  auto finish = [&] { return Json{{"command", "verify"}, {"verified", all}, {"checks", checks}}; };

  const Json& command_json = field_of(report, "command", "report");
  if (!command_json.is_string()) throw Error(ErrorCode::InvalidInput, "report: command must be a string");
  const std::string command = command_json.get<std::string>();
  const Json& input = field_of(report, "input", "report");

  const Json rays = input_json(problem)["rays"];
  const bool same_cone = field_of(input, "rays", "report.input") == rays &&
                         to_integer(field_of(input, "rank", "report.input"), "report.input.rank") ==
                             Integer(static_cast<unsigned long>(problem.cone.rank()));
  check("cone", same_cone, same_cone ? "" : "the report was computed for a different cone");
  if (!same_cone) return finish();

  Divisor divisor{to_vector(field_of(input, "divisor", "report.input"), "report.input.divisor")};
  check_divisor(problem.cone, divisor);
  MonomialIdeal ideal = to_ideal(field_of(input, "ideal", "report.input"), problem.cone);
  const Integer p = to_integer(field_of(input, "characteristic", "report.input"), "report.input.characteristic");
  if (p < 0 || !p.fits_ulong_p()) throw Error(ErrorCode::InvalidField, "characteristic " + p.get_str());
  const Problem recorded{problem.cone, std::move(divisor), std::move(ideal), FieldSpec(p.get_ui())};
  const std::size_t n = problem.cone.ray_count();

  Json recomputed;
  if (command == "faces") {
    recomputed = faces_report(recorded);
  } else if (command == "support") {
    recomputed = support_report(recorded);
  } else if (command == "cosupport") {
    recomputed = cosupport_report(recorded);
  } else if (command == "chambers") {
    recomputed = chambers_report(recorded, limits);
    for (const auto& row : field_of(report, "chambers", "report")) {
      const auto w = optional_from(field_of(row, "lattice_witness", "chamber"), "lattice_witness");
      if (!w) continue;
      const RaySet pi = to_rays(field_of(row, "pi", "chamber"), n, "pi");
      const bool ok = w->size() == problem.cone.rank() &&
                      chamber_system(problem.cone, recorded.divisor, pi, ChamberFlavor::Semistrict).satisfied_by(*w);
      check("witness " + pi.label(), ok, to_string(*w));
    }
  } else if (command == "cohomology") {
    const IntVector degree = to_vector(field_of(report, "degree", "report"), "degree");
    if (degree.size() != problem.cone.rank())
      throw Error(ErrorCode::DimensionMismatch, "report degree has the wrong length");
    recomputed = cohomology_report(recorded, degree);
    const RaySet claimed = to_rays(field_of(report, "sigma_m", "report"), n, "sigma_m");
    check("sigma_m", sigma_m(problem.cone, recorded.divisor, degree) == claimed, claimed.label());
  } else if (command == "depth") {
    recomputed = depth_report(recorded, limits);
  } else if (command == "mcm check") {
    recomputed = mcm_check_report(recorded, limits);
    const auto lattice = face_lattice(problem.cone);
    for (const auto& row : field_of(report, "records", "report")) {
      const auto w = optional_from(field_of(row, "witness", "record"), "witness");
      if (!w) continue;
      const RaySet pi = to_rays(field_of(row, "pi", "record"), n, "pi");
      const bool ok = w->size() == problem.cone.rank() &&
                      chamber_system(problem.cone, recorded.divisor, pi, ChamberFlavor::Semistrict).satisfied_by(*w);
      check("witness " + pi.label(), ok, to_string(*w));
    }
    const Json& violation = field_of(report, "violation", "report");
    if (!violation.is_null()) {
      PiRecord record;
      record.pi = to_rays(field_of(violation, "pi", "violation"), n, "pi");
      record.outcome = PiOutcome::Violation;
      const Json& degree = field_of(violation, "degree", "violation");
      if (!degree.is_null()) record.degree = static_cast<int>(to_integer(degree, "degree").get_si());
      record.witness = optional_from(field_of(violation, "witness", "violation"), "witness");
      const bool ok = record.witness && record.witness->size() == problem.cone.rank() &&
                      verify_violation(problem.cone, lattice, recorded.divisor, recorded.field, record);
      check("violation " + record.pi.label(), ok);
    }
  } else if (command == "mcm enumerate") {
    const Integer b = to_integer(field_of(report, "coeff_bound", "report"), "coeff_bound");
    if (b < 0 || !b.fits_ulong_p()) throw Error(ErrorCode::InvalidInput, "coeff_bound out of range");
    recomputed = mcm_enumerate_report(recorded, b.get_ui(), limits);
  } else if (command == "singularity") {
    recomputed = singularity_report(recorded, limits);
  } else {
    throw Error(ErrorCode::InvalidInput, "report: unknown command \"" + command + "\"");
  }
  check("recomputation", recomputed == report, recomputed == report ? "" : "recomputed report differs");
  return finish();
}

}  // namespace toric::io
