#ifndef QUARTICS_FIXEDPOINT_IO_HPP
#define QUARTICS_FIXEDPOINT_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "quartics/fixedpoints.hpp"

namespace quartics {

// JSON record per fixed point:
//   {"stage": "blowup1", "hyperplane": 2 | null,
//    "ideal": ["x0^0*x1^1*...", ...],
//    "tangent": [{"monomial": "...", "multiplicity": 2}, ...],
//    "fiber": ["...", ...]}
// Arrays follow the canonical (lexicographic) term order.

nlohmann::ordered_json to_json(const FixedPoint& p);
/// Throws std::invalid_argument on a malformed record.
FixedPoint fixed_point_from_json(const nlohmann::json& j);

/// JSON array of records, two-space indented, trailing newline.
std::string dump_json(const std::vector<FixedPoint>& points);
std::vector<FixedPoint> parse_json(const std::string& text);

/// One line per point: label, tangent and fiber.
std::string dump_text(const std::vector<FixedPoint>& points);

}  // namespace quartics

#endif  // QUARTICS_FIXEDPOINT_IO_HPP
