#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stacky/rational.hpp"

namespace stacky {

class LineBundleClass;

// Point with nontrivial cyclic stabilizer; order is the stabilizer order.
struct StackyPoint {
  std::string label;
  int order = 2; // >= 2
};

struct Violation {
  std::string location; // "genus", "points[1]", ...
  std::string message;

  std::string str() const {
    return location.empty() ? message : location + ": " + message;
  }
};

// A tame stacky curve: coarse genus plus an ordered list of stacky points.
// The point order is fixed at construction and canonical; all per-point data
// elsewhere is stored positionally in this order and keyed by label at the
// file-format boundary.
class StackyCurve {
public:
  // Throws ValidationError with the first violation. Use validate_curve to
  // collect all of them.
  StackyCurve(int coarse_genus, std::vector<StackyPoint> points);

  int coarse_genus() const { return genus_; }
  const std::vector<StackyPoint>& points() const { return points_; }
  std::size_t num_points() const { return points_.size(); }
  int order(std::size_t i) const { return points_[i].order; }
  const std::string& label(std::size_t i) const { return points_[i].label; }
  std::optional<std::size_t> find(const std::string& label) const;

  bool operator==(const StackyCurve& other) const;
  bool operator!=(const StackyCurve& other) const { return !(*this == other); }

private:
  int genus_ = 0;
  std::vector<StackyPoint> points_;
};

using CurveRef = std::shared_ptr<const StackyCurve>;

struct CurveValidation {
  CurveRef curve; // null when invalid
  std::vector<Violation> violations;

  bool ok() const { return curve != nullptr; }
};

// Total: every input yields either a curve or a nonempty violation list
// (duplicate labels, order < 2, negative genus), never both.
CurveValidation validate_curve(long long coarse_genus,
                               const std::vector<StackyPoint>& points);

bool same_curve(const StackyCurve& a, const StackyCurve& b);

// Throws ValidationError unless a and b are structurally equal.
void require_same_curve(const StackyCurve& a, const StackyCurve& b,
                        const char* what);

// g + (1/2) * sum_p (e_p - 1)/e_p.
Rational stacky_genus(const StackyCurve& curve);

// Coarse degree 2g - 2, twist e_p - 1 at every stacky point.
LineBundleClass canonical_class(const CurveRef& curve);

} // namespace stacky
