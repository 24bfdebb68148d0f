#pragma once

#include <string>

#include <json.hpp>

#include "stacky/stability.hpp"
#include "stacky/walls.hpp"

namespace stacky {

using Json = nlohmann::ordered_json;

// {"genus": <int>, "points": [{"label": <string>, "order": <int>}, ...]}
CurveValidation curve_from_json(const Json& j);

// {"rank": <int>, "coarse_degree": <int>,
//  "multiplicities": {"<label>": [<int>, ...], ...}}
// Omitted labels get the pullback pattern (rank, 0, ..., 0).
NumericalInvariant invariant_from_json(const CurveRef& curve, const Json& j);

// {"coarse_degree": <int>, "twists": {"<label>": <int>, ...}}
// Omitted labels mean twist 0.
LineBundleClass line_class_from_json(const CurveRef& curve, const Json& j);

// {"summands": [<line-bundle-class>, ...]}
LineSum line_sum_from_json(const CurveRef& curve, const Json& j);

// {"<label>": <int>, ...}; free-form labels allowed, zeros dropped.
FormalPointSum point_sum_from_json(const Json& j);

Json curve_to_json(const StackyCurve& curve);
Json invariant_to_json(const NumericalInvariant& value);
Json line_class_to_json(const LineBundleClass& line);
Json line_sum_to_json(const LineSum& sum);
Json point_sum_to_json(const FormalPointSum& sum);
Json hn_type_to_json(const HNType& hn);
Json wall_report_to_json(const WallReport& report);
Json segment_walls_to_json(const std::vector<SegmentWall>& walls);
Json bounds_report_to_json(const BoundsReport& report);

// Integers that fit in 64 bits serialize as JSON numbers, wider ones as
// decimal strings; either form re-parses exactly.
Json int_to_json(const Int& x);
Int int_from_json(const Json& j, const char* field);

// Stable 64-bit FNV-1a digest of the validated curve data, hex-encoded.
std::string curve_digest(const StackyCurve& curve);

std::string render_invariant(const NumericalInvariant& value);
std::string render_line_class(const LineBundleClass& line);

} // namespace stacky
