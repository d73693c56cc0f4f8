#pragma once

#include <cstddef>

#include "problem.hpp"

namespace toric::io {

/// Every report carries "command" and "input" (rank, rays, divisor, ideal,
/// characteristic) so that `verify` can recompute it.
Json input_json(const Problem& problem);

Json faces_report(const Problem& problem);
Json support_report(const Problem& problem);
Json cosupport_report(const Problem& problem);
Json chambers_report(const Problem& problem, const Limits& limits);
Json cohomology_report(const Problem& problem, const IntVector& degree);
Json depth_report(const Problem& problem, const Limits& limits);
Json mcm_check_report(const Problem& problem, const Limits& limits);
Json mcm_enumerate_report(const Problem& problem, std::size_t coeff_bound, const Limits& limits);
Json singularity_report(const Problem& problem, const Limits& limits);

/// Recomputes `report` from its recorded input (which must name the same cone as
/// `problem`) and substitutes every witness it carries into its defining system.
/// Returns {"command": "verify", "verified": bool, "checks": [...]}.
Json verify_report(const Problem& problem, const Json& report, const Limits& limits);

}  // namespace toric::io
