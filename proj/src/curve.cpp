#include "stacky/curve.hpp"

#include <limits>
#include <set>

#include "stacky/errors.hpp"
#include "stacky/invariant.hpp"

namespace stacky {

namespace {

std::vector<Violation> check_curve(long long genus,
                                   const std::vector<StackyPoint>& points) {
  std::vector<Violation> out;
  if (genus < 0) {
    out.push_back({"genus", "genus must be >= 0"});
  }
  if (genus > std::numeric_limits<int>::max()) {
    out.push_back({"genus", "genus out of range"});
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto loc = "points[" + std::to_string(i) + "]";
    if (points[i].order < 2) {
      out.push_back({loc, "order must be >= 2 (got " +
                              std::to_string(points[i].order) + ")"});
    }
    if (!seen.insert(points[i].label).second) {
      out.push_back({loc, "duplicate label " + points[i].label});
    }
  }
  return out;
}

} // namespace

StackyCurve::StackyCurve(int coarse_genus, std::vector<StackyPoint> points)
    : genus_(coarse_genus), points_(std::move(points)) {
  auto violations = check_curve(coarse_genus, points_);
  if (!violations.empty()) {
    throw ValidationError(violations.front().str());
  }
}

std::optional<std::size_t> StackyCurve::find(const std::string& label) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].label == label) {
      return i;
    }
  }
  return std::nullopt;
}

bool StackyCurve::operator==(const StackyCurve& other) const {
  if (genus_ != other.genus_ || points_.size() != other.points_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].label != other.points_[i].label ||
        points_[i].order != other.points_[i].order) {
      return false;
    }
  }
  return true;
}

CurveValidation validate_curve(long long coarse_genus,
                               const std::vector<StackyPoint>& points) {
  CurveValidation result;
  result.violations = check_curve(coarse_genus, points);
  if (result.violations.empty()) {
    result.curve = std::make_shared<StackyCurve>(
        static_cast<int>(coarse_genus), points);
  }
  return result;
}

bool same_curve(const StackyCurve& a, const StackyCurve& b) {
  return a == b;
}

void require_same_curve(const StackyCurve& a, const StackyCurve& b,
                        const char* what) {
  if (!same_curve(a, b)) {
    throw ValidationError(std::string(what) + ": values live on different curves");
  }
}

Rational stacky_genus(const StackyCurve& curve) {
  Rational g(curve.coarse_genus());
  for (const auto& p : curve.points()) {
    g += Rational(Int(p.order) - 1, Int(2) * p.order);
  }
  return g;
}

LineBundleClass canonical_class(const CurveRef& curve) {
  std::vector<int> twists;
  twists.reserve(curve->num_points());
  for (const auto& p : curve->points()) {
    twists.push_back(p.order - 1);
  }
  return LineBundleClass(curve, Int(2) * curve->coarse_genus() - 2,
                         std::move(twists));
}

} // namespace stacky
