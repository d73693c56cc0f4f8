#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "json.hpp"
#include "toric/chambers.hpp"
#include "toric/lattice_geometry.hpp"
#include "toric/simplicial.hpp"
#include "toric/toric_data.hpp"

namespace toric::io {

using Json = nlohmann::json;

struct Limits {
  std::size_t max_rays = 12;
  std::size_t max_rank = 6;
  std::size_t max_box = 5;
  unsigned jobs = 0;

  SweepOptions sweep() const { return SweepOptions{max_rays, max_box, jobs}; }
};

struct Problem {
  Cone cone;
  Divisor divisor;
  MonomialIdeal ideal;
  FieldSpec field;
};

/// Strict JSON. Integer literals too large for 64 bits come back as decimal strings;
/// any other non-integral number is a ParseError.
Json parse_json(std::string_view text);

/// Accepts a JSON integer or a decimal string.
Integer to_integer(const Json& value, const std::string& what);
IntVector to_vector(const Json& value, const std::string& what);
std::vector<IntVector> to_vectors(const Json& value, const std::string& what);

/// int64 when it fits, else a decimal string.
Json from_integer(const Integer& z);
Json from_vector(const IntVector& v);
/// 1-based ray labels.
Json from_rays(RaySet rays);
RaySet to_rays(const Json& value, std::size_t ray_count, const std::string& what);

/// "maximal" or {"generators": [...]}.
MonomialIdeal to_ideal(const Json& value, const Cone& cone);
Json from_ideal(const MonomialIdeal& ideal);

/// Rejects unknown keys. Throws Error(RankTooLarge) above limits.max_rank.
Problem load_problem(const Json& doc, const Limits& limits);
Problem parse_problem(std::string_view text, const Limits& limits);

/// Two-space indent, sorted keys, trailing newline.
std::string dump(const Json& value);

}  // namespace toric::io
