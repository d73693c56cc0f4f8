#include "problem.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "toric/error.hpp"

namespace toric::io {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Builds a Json tree like the stock DOM parser, except that overflowing integer
// literals keep their text.
class ExactSax {
 public:
  explicit ExactSax(Json& root) : root_(root) {}

  bool null() { return put(Json(nullptr)); }
  bool boolean(bool b) { return put(Json(b)); }
  bool number_integer(Json::number_integer_t v) { return put(Json(v)); }
  bool number_unsigned(Json::number_unsigned_t v) { return put(Json(v)); }
  bool number_float(Json::number_float_t, const Json::string_t& text) {
    if (!is_integer_literal(text)) throw Error(ErrorCode::ParseError, "non-integer number " + text);
    return put(Json(text));
  }
  bool string(Json::string_t& s) { return put(Json(s)); }
  bool binary(Json::binary_t&) { throw Error(ErrorCode::ParseError, "binary values are not supported"); }

  bool start_object(std::size_t) {
    stack_.push_back(put_container(Json::object()));
    return true;
  }
  bool key(Json::string_t& k) {
    if (stack_.back()->contains(k)) throw Error(ErrorCode::ParseError, "duplicate key \"" + k + "\"");
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    stack_.push_back(put_container(Json::array()));
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    throw Error(ErrorCode::ParseError, "at byte " + std::to_string(position) + ": " + ex.what());
  }

 private:
  Json* put_container(Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    Json& parent = *stack_.back();
    if (parent.is_array()) {
      parent.push_back(std::move(value));
      return &parent.back();
    }
    return &(parent[key_] = std::move(value));
  }
  bool put(Json value) {
    put_container(std::move(value));
    return true;
  }

  Json& root_;
  std::vector<Json*> stack_;
  std::string key_;
};

Error invalid(const std::string& what, const std::string& message) {
  return Error(ErrorCode::InvalidInput, what + ": " + message);
}

std::size_t to_size(const Json& value, const std::string& what) {
  const Integer z = to_integer(value, what);
  if (z < 0 || !z.fits_ulong_p()) throw invalid(what, "expected a nonnegative integer");
  return z.get_ui();
}

}  // namespace

Json parse_json(std::string_view text) {
  Json root;
  ExactSax sax(root);
  Json::sax_parse(text, &sax);
  return root;
}

Integer to_integer(const Json& value, const std::string& what) {
  if (value.is_number_integer() && !value.is_number_unsigned()) return Integer(value.get<long>());
  if (value.is_number_unsigned()) return Integer(std::to_string(value.get<unsigned long>()));
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (is_integer_literal(s)) return parse_integer(s);
  }
  throw invalid(what, "expected an integer, got " + value.dump());
}

IntVector to_vector(const Json& value, const std::string& what) {
  if (!value.is_array()) throw invalid(what, "expected a list of integers");
  IntVector out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(to_integer(value[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<IntVector> to_vectors(const Json& value, const std::string& what) {
  if (!value.is_array()) throw invalid(what, "expected a list of integer vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(to_vector(value[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

Json from_integer(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json from_vector(const IntVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(from_integer(z));
  return out;
}

Json from_rays(RaySet rays) {
  Json out = Json::array();
  for (auto i : rays.indices()) out.push_back(i + 1);
  return out;
}

RaySet to_rays(const Json& value, std::size_t ray_count, const std::string& what) {
  if (!value.is_array()) throw invalid(what, "expected a list of ray labels");
  RaySet out;
  for (const auto& label : value) {
    const std::size_t i = to_size(label, what);
    if (i == 0 || i > ray_count) throw invalid(what, "ray label " + label.dump() + " out of range");
    out = out.with(i - 1);
  }
  return out;
}

MonomialIdeal to_ideal(const Json& value, const Cone& cone) {
  if (value.is_string()) {
    if (value.get_ref<const std::string&>() == "maximal") return MonomialIdeal::maximal();
    throw invalid("ideal", "expected \"maximal\" or {\"generators\": [...]}");
  }
  if (!value.is_object() || !value.contains("generators") || value.size() != 1)
    throw invalid("ideal", "expected \"maximal\" or {\"generators\": [...]}");
  auto ideal = MonomialIdeal::generated_by(to_vectors(value["generators"], "ideal.generators"));
  check_ideal(cone, ideal);
  return ideal;
}

Json from_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_maximal()) return Json("maximal");
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(from_vector(g));
  return Json{{"generators", gens}};
}

Problem load_problem(const Json& doc, const Limits& limits) {
  if (!doc.is_object()) throw invalid("problem", "expected an object");
  for (const auto& [k, v] : doc.items()) {
    (void)v;
    if (k != "lattice_rank" && k != "rays" && k != "divisor" && k != "ideal" && k != "field")
      throw invalid("problem", "unknown key \"" + k + "\"");
  }
  if (!doc.contains("lattice_rank")) throw invalid("problem", "missing lattice_rank");
  if (!doc.contains("rays")) throw invalid("problem", "missing rays");
  const std::size_t rank = to_size(doc["lattice_rank"], "lattice_rank");
  if (rank > limits.max_rank)
    throw Error(ErrorCode::RankTooLarge,
                "rank " + std::to_string(rank) + " exceeds the cap of " + std::to_string(limits.max_rank));
  Cone cone = validate_cone(rank, to_vectors(doc["rays"], "rays"));

  Divisor divisor = Divisor::zero(cone);
  if (doc.contains("divisor")) {
    divisor.coefficients = to_vector(doc["divisor"], "divisor");
    check_divisor(cone, divisor);
  }
  MonomialIdeal ideal = doc.contains("ideal") ? to_ideal(doc["ideal"], cone) : MonomialIdeal::maximal();
  FieldSpec field;
  if (doc.contains("field")) {
    const Json& f = doc["field"];
    if (!f.is_object()) throw invalid("field", "expected {\"characteristic\": p}");
    for (const auto& [k, v] : f.items()) {
      (void)v;
      if (k != "characteristic") throw invalid("field", "unknown key \"" + k + "\"");
    }
    if (f.contains("characteristic")) {
      const Integer p = to_integer(f["characteristic"], "field.characteristic");
      if (p < 0 || !p.fits_ulong_p()) throw Error(ErrorCode::InvalidField, "characteristic " + p.get_str());
      field = FieldSpec(p.get_ui());
    }
  }
  return Problem{std::move(cone), std::move(divisor), std::move(ideal), field};
}

Problem parse_problem(std::string_view text, const Limits& limits) { return load_problem(parse_json(text), limits); }

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

}  // namespace toric::io
