#include "stacky/io.hpp"

#include <cstdint>
#include <cstdio>
#include <limits>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

const Json& require_field(const Json& j, const char* field) {
  if (!j.is_object()) {
    throw ValidationError(std::string("expected a JSON object with field \"") +
                          field + "\"");
  }
  auto it = j.find(field);
  if (it == j.end()) {
    throw ValidationError(std::string("missing field \"") + field + "\"");
  }
  return *it;
}

long long small_int(const Json& j, const char* field) {
  if (!j.is_number_integer()) {
    throw ValidationError(std::string("field \"") + field +
                          "\" must be an integer");
  }
  return j.get<long long>();
}

} // namespace

Int int_from_json(const Json& j, const char* field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      return Int(j.get<std::uint64_t>());
    }
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ValidationError(std::string("field \"") + field +
                            "\" is not a valid integer string");
    }
  }
  throw ValidationError(std::string("field \"") + field +
                        "\" must be an integer or integer string");
}

Json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) {
    return Json(static_cast<std::int64_t>(x));
  }
  return Json(x.str());
}

CurveValidation curve_from_json(const Json& j) {
  const auto genus = small_int(require_field(j, "genus"), "genus");
  std::vector<StackyPoint> points;
  if (j.contains("points")) {
    const auto& arr = j.at("points");
    if (!arr.is_array()) {
      throw ValidationError("field \"points\" must be an array");
    }
    for (const auto& entry : arr) {
      StackyPoint point;
      const auto& label = require_field(entry, "label");
      if (!label.is_string()) {
        throw ValidationError("point label must be a string");
      }
      point.label = label.get<std::string>();
      const auto order = small_int(require_field(entry, "order"), "order");
      if (order < std::numeric_limits<int>::min() ||
          order > std::numeric_limits<int>::max()) {
        throw ValidationError("point order out of range");
      }
      point.order = static_cast<int>(order);
      points.push_back(std::move(point));
    }
  }
  return validate_curve(genus, points);
}

NumericalInvariant invariant_from_json(const CurveRef& curve, const Json& j) {
  Int rank = int_from_json(require_field(j, "rank"), "rank");
  Int degree = int_from_json(require_field(j, "coarse_degree"), "coarse_degree");
  std::map<std::string, std::vector<Int>> mult;
  if (j.contains("multiplicities")) {
    const auto& obj = j.at("multiplicities");
    if (!obj.is_object()) {
      throw ValidationError("field \"multiplicities\" must be an object");
    }
    for (const auto& [label, arr] : obj.items()) {
      if (!arr.is_array()) {
        throw ValidationError("multiplicities at " + label +
                              " must be an array");
      }
      std::vector<Int> vec;
      vec.reserve(arr.size());
      for (const auto& entry : arr) {
        vec.push_back(int_from_json(entry, "multiplicities"));
      }
      mult.emplace(label, std::move(vec));
    }
  }
  return make_invariant(curve, std::move(rank), std::move(degree), mult);
}

LineBundleClass line_class_from_json(const CurveRef& curve, const Json& j) {
  Int degree = int_from_json(require_field(j, "coarse_degree"), "coarse_degree");
  std::map<std::string, int> twists;
  if (j.contains("twists")) {
    const auto& obj = j.at("twists");
    if (!obj.is_object()) {
      throw ValidationError("field \"twists\" must be an object");
    }
    for (const auto& [label, value] : obj.items()) {
      twists.emplace(label,
                     static_cast<int>(small_int(value, "twists")));
    }
  }
  return make_line_class(curve, std::move(degree), twists);
}

LineSum line_sum_from_json(const CurveRef& curve, const Json& j) {
  const auto& arr = require_field(j, "summands");
  if (!arr.is_array() || arr.empty()) {
    throw ValidationError("field \"summands\" must be a nonempty array");
  }
  std::vector<LineBundleClass> summands;
  summands.reserve(arr.size());
  for (const auto& entry : arr) {
    summands.push_back(line_class_from_json(curve, entry));
  }
  return LineSum(std::move(summands));
}

FormalPointSum point_sum_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ValidationError("a formal point sum must be a JSON object");
  }
  FormalPointSum sum;
  for (const auto& [label, value] : j.items()) {
    Int coeff = int_from_json(value, "point sum coefficient");
    if (coeff != 0) {
      sum.coefficients.emplace(label, std::move(coeff));
    }
  }
  return sum;
}

Json curve_to_json(const StackyCurve& curve) {
  Json points = Json::array();
  for (const auto& p : curve.points()) {
    points.push_back({{"label", p.label}, {"order", p.order}});
  }
  return {{"genus", curve.coarse_genus()}, {"points", std::move(points)}};
}

Json invariant_to_json(const NumericalInvariant& value) {
  Json mult = Json::object();
  const auto& curve = *value.curve();
  for (std::size_t p = 0; p < curve.num_points(); ++p) {
    Json arr = Json::array();
    for (const auto& m : value.mult_vector(p)) {
      arr.push_back(int_to_json(m));
    }
    mult[curve.label(p)] = std::move(arr);
  }
  return {{"rank", int_to_json(value.rank())},
          {"coarse_degree", int_to_json(value.coarse_degree())},
          {"multiplicities", std::move(mult)}};
}

Json line_class_to_json(const LineBundleClass& line) {
  Json twists = Json::object();
  const auto& curve = *line.curve();
  for (std::size_t p = 0; p < curve.num_points(); ++p) {
    if (line.twist(p) != 0) {
      twists[curve.label(p)] = line.twist(p);
    }
  }
  return {{"coarse_degree", int_to_json(line.coarse_degree())},
          {"twists", std::move(twists)}};
}

Json line_sum_to_json(const LineSum& sum) {
  Json arr = Json::array();
  for (const auto& line : sum.summands()) {
    arr.push_back(line_class_to_json(line));
  }
  return {{"summands", std::move(arr)}};
}

Json point_sum_to_json(const FormalPointSum& sum) {
  Json obj = Json::object();
  for (const auto& [label, coeff] : sum.coefficients) {
    obj[label] = int_to_json(coeff);
  }
  return obj;
}

Json hn_type_to_json(const HNType& hn) {
  Json blocks = Json::array();
  for (const auto& block : hn.blocks) {
    Json summands = Json::array();
    for (const auto& line : block.summands) {
      summands.push_back(line_class_to_json(line));
    }
    blocks.push_back({{"slope", render_rational(block.slope)},
                      {"summands", std::move(summands)},
                      {"invariant", invariant_to_json(block.invariant)}});
  }
  return {{"blocks", std::move(blocks)}, {"semistable", hn.semistable()}};
}

Json wall_report_to_json(const WallReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(invariant_to_json(w));
  }
  return {{"on_wall", report.on_wall}, {"witnesses", std::move(witnesses)}};
}

Json segment_walls_to_json(const std::vector<SegmentWall>& walls) {
  Json arr = Json::array();
  for (const auto& wall : walls) {
    Json witnesses = Json::array();
    for (const auto& w : wall.report.witnesses) {
      witnesses.push_back(invariant_to_json(w));
    }
    arr.push_back({{"t_begin", render_rational(wall.t_begin)},
                   {"t_end", render_rational(wall.t_end)},
                   {"witnesses", std::move(witnesses)}});
  }
  return arr;
}

Json bounds_report_to_json(const BoundsReport& report) {
  return {{"kappa", render_rational(report.kappa)},
          {"kappa_plus", render_rational(report.kappa_plus)},
          {"basepoint_free_min_m", int_to_json(report.basepoint_free_min_m)},
          {"finite_map_min_m", int_to_json(report.finite_map_min_m)},
          {"stack_dim", int_to_json(report.stack_dim)}};
}

std::string curve_digest(const StackyCurve& curve) {
  // FNV-1a, 64-bit; length-prefixed labels keep the encoding unambiguous.
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(std::to_string(curve.coarse_genus()));
  for (const auto& p : curve.points()) {
    feed(";");
    feed(std::to_string(p.label.size()));
    feed(p.label);
    feed(":");
    feed(std::to_string(p.order));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string render_line_class(const LineBundleClass& line) {
  std::string out = "(d=" + render_int(line.coarse_degree());
  const auto& curve = *line.curve();
  for (std::size_t p = 0; p < curve.num_points(); ++p) {
    if (line.twist(p) != 0) {
      out += ", " + curve.label(p) + ":" + std::to_string(line.twist(p));
    }
  }
  out += ")";
  return out;
}

std::string render_invariant(const NumericalInvariant& value) {
  std::string out = "(r=" + render_int(value.rank()) +
                    ", d=" + render_int(value.coarse_degree());
  const auto& curve = *value.curve();
  for (std::size_t p = 0; p < curve.num_points(); ++p) {
    out += ", " + curve.label(p) + ":[";
    const auto& m = value.mult_vector(p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += render_int(m[i]);
    }
    out += "]";
  }
  out += ")";
  return out;
}

} // namespace stacky
