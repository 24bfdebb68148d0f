#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stacky/curve.hpp"
#include "stacky/rational.hpp"

namespace stacky {

// Normalized representative of a Picard-group element: coarse degree plus a
// twist a_p with 0 <= a_p < e_p at each stacky point.
class LineBundleClass {
public:
  LineBundleClass(CurveRef curve, Int coarse_degree, std::vector<int> twists);

  const CurveRef& curve() const { return curve_; }
  const Int& coarse_degree() const { return degree_; }
  int twist(std::size_t point) const { return twists_[point]; }
  const std::vector<int>& twists() const { return twists_; }

  bool operator==(const LineBundleClass& other) const;
  bool operator!=(const LineBundleClass& other) const { return !(*this == other); }

private:
  CurveRef curve_;
  Int degree_;
  std::vector<int> twists_; // one entry per stacky point, curve order
};

// (degree, twists) lexicographic; both classes must live on the same curve.
bool canonical_less(const LineBundleClass& a, const LineBundleClass& b);

// Twists given by label; omitted labels mean twist 0.
LineBundleClass make_line_class(const CurveRef& curve, Int coarse_degree,
                                const std::map<std::string, int>& twists = {});

LineBundleClass trivial_class(const CurveRef& curve);

// Element of the numerical Grothendieck group: rank, coarse pushforward
// degree, and at each stacky point an integer multiplicity vector of length
// e_p whose entries sum to the rank. Rank and multiplicities may be
// negative; positivity is a predicate, not a type constraint.
class NumericalInvariant {
public:
  NumericalInvariant(CurveRef curve, Int rank, Int coarse_degree,
                     std::vector<std::vector<Int>> multiplicities);

  const CurveRef& curve() const { return curve_; }
  const Int& rank() const { return rank_; }
  const Int& coarse_degree() const { return degree_; }
  const Int& mult(std::size_t point, std::size_t slot) const {
    return mult_[point][slot];
  }
  const std::vector<Int>& mult_vector(std::size_t point) const {
    return mult_[point];
  }
  const std::vector<std::vector<Int>>& multiplicities() const { return mult_; }

  bool operator==(const NumericalInvariant& other) const;
  bool operator!=(const NumericalInvariant& other) const {
    return !(*this == other);
  }

private:
  CurveRef curve_;
  Int rank_;
  Int degree_;
  std::vector<std::vector<Int>> mult_; // [point][slot], lengths e_p
};

// (rank, degree, multiplicities) lexicographic; same-curve inputs.
bool canonical_less(const NumericalInvariant& a, const NumericalInvariant& b);

// Multiplicities given by label; an omitted label gets the pullback pattern
// (rank, 0, ..., 0).
NumericalInvariant
make_invariant(const CurveRef& curve, Int rank, Int coarse_degree,
               const std::map<std::string, std::vector<Int>>& multiplicities);

// Exact expression of an invariant as an integer combination of degree-zero
// line-bundle classes plus a multiple of the skyscraper class.
struct GeneratorCombination {
  std::vector<std::pair<Int, LineBundleClass>> line_terms;
  Int delta_coefficient;
};

} // namespace stacky
