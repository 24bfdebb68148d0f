#include "stacky/invariant.hpp"

#include "stacky/errors.hpp"

namespace stacky {

LineBundleClass::LineBundleClass(CurveRef curve, Int coarse_degree,
                                 std::vector<int> twists)
    : curve_(std::move(curve)), degree_(std::move(coarse_degree)),
      twists_(std::move(twists)) {
  if (!curve_) {
    throw ValidationError("line class: null curve");
  }
  if (twists_.size() != curve_->num_points()) {
    throw ValidationError("line class: expected one twist per stacky point");
  }
  for (std::size_t i = 0; i < twists_.size(); ++i) {
    if (twists_[i] < 0 || twists_[i] >= curve_->order(i)) {
      throw ValidationError("line class: twist at " + curve_->label(i) +
                            " outside [0, " +
                            std::to_string(curve_->order(i)) + ")");
    }
  }
}

bool LineBundleClass::operator==(const LineBundleClass& other) const {
  return same_curve(*curve_, *other.curve_) && degree_ == other.degree_ &&
         twists_ == other.twists_;
}

bool canonical_less(const LineBundleClass& a, const LineBundleClass& b) {
  if (a.coarse_degree() != b.coarse_degree()) {
    return a.coarse_degree() < b.coarse_degree();
  }
  return a.twists() < b.twists();
}

LineBundleClass make_line_class(const CurveRef& curve, Int coarse_degree,
                                const std::map<std::string, int>& twists) {
  std::vector<int> by_index(curve->num_points(), 0);
  for (const auto& [label, twist] : twists) {
    auto idx = curve->find(label);
    if (!idx) {
      throw ValidationError("line class references unknown point label " +
                            label);
    }
    by_index[*idx] = twist;
  }
  return LineBundleClass(curve, std::move(coarse_degree), std::move(by_index));
}

LineBundleClass trivial_class(const CurveRef& curve) {
  return LineBundleClass(curve, 0, std::vector<int>(curve->num_points(), 0));
}

NumericalInvariant::NumericalInvariant(CurveRef curve, Int rank,
                                       Int coarse_degree,
                                       std::vector<std::vector<Int>> mult)
    : curve_(std::move(curve)), rank_(std::move(rank)),
      degree_(std::move(coarse_degree)), mult_(std::move(mult)) {
  if (!curve_) {
    throw ValidationError("invariant: null curve");
  }
  if (mult_.size() != curve_->num_points()) {
    throw ValidationError(
        "invariant: expected one multiplicity vector per stacky point");
  }
  for (std::size_t p = 0; p < mult_.size(); ++p) {
    if (mult_[p].size() != static_cast<std::size_t>(curve_->order(p))) {
      throw ValidationError("invariant: multiplicity vector at " +
                            curve_->label(p) + " must have length " +
                            std::to_string(curve_->order(p)));
    }
    Int sum = 0;
    for (const auto& m : mult_[p]) {
      sum += m;
    }
    if (sum != rank_) {
      throw ValidationError("invariant: multiplicities at " +
                            curve_->label(p) + " sum to " + sum.str() +
                            ", expected rank " + rank_.str());
    }
  }
}

bool NumericalInvariant::operator==(const NumericalInvariant& other) const {
  return same_curve(*curve_, *other.curve_) && rank_ == other.rank_ &&
         degree_ == other.degree_ && mult_ == other.mult_;
}

bool canonical_less(const NumericalInvariant& a, const NumericalInvariant& b) {
  if (a.rank() != b.rank()) {
    return a.rank() < b.rank();
  }
  if (a.coarse_degree() != b.coarse_degree()) {
    return a.coarse_degree() < b.coarse_degree();
  }
  return a.multiplicities() < b.multiplicities();
}

NumericalInvariant
make_invariant(const CurveRef& curve, Int rank, Int coarse_degree,
               const std::map<std::string, std::vector<Int>>& multiplicities) {
  std::vector<std::vector<Int>> by_index(curve->num_points());
  std::vector<bool> given(curve->num_points(), false);
  for (const auto& [label, vec] : multiplicities) {
    auto idx = curve->find(label);
    if (!idx) {
      throw ValidationError("invariant references unknown point label " +
                            label);
    }
    by_index[*idx] = vec;
    given[*idx] = true;
  }
  for (std::size_t p = 0; p < by_index.size(); ++p) {
    if (!given[p]) {
      by_index[p].assign(static_cast<std::size_t>(curve->order(p)), Int(0));
      by_index[p][0] = rank;
    }
  }
  return NumericalInvariant(curve, std::move(rank), std::move(coarse_degree),
                            std::move(by_index));
}

} // namespace stacky
