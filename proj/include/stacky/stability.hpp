#pragma once

#include <vector>

#include "stacky/ktheory.hpp"

namespace stacky {

// A direct sum of line-bundle classes (repeats allowed) with its cached
// total invariant.
class LineSum {
public:
  explicit LineSum(std::vector<LineBundleClass> summands);

  const CurveRef& curve() const { return total_.curve(); }
  const std::vector<LineBundleClass>& summands() const { return summands_; }
  const NumericalInvariant& total() const { return total_; }

private:
  std::vector<LineBundleClass> summands_; // nonempty
  NumericalInvariant total_;
};

struct HNBlock {
  Rational slope;
  std::vector<LineBundleClass> summands; // canonically sorted within the block
  NumericalInvariant invariant;
};

// Blocks in strictly decreasing slope order; block invariants sum to the
// total. A bundle is declared semistable iff there is exactly one block.
struct HNType {
  std::vector<HNBlock> blocks;

  bool semistable() const { return blocks.size() == 1; }
};

// mu_a(c) = deg_a(c) / rank(c). Requires rank(a) > 0 and rank(c) > 0.
Rational slope(const NumericalInvariant& a, const NumericalInvariant& c);

// Sign of mu_a(c) - mu_a(b), computed by integer cross-multiplication:
// sign(rank(b)*deg_a(c) - rank(c)*deg_a(b)). Requires positive ranks of b, c.
int slope_compare(const NumericalInvariant& a, const NumericalInvariant& b,
                  const NumericalInvariant& c);

// Returns a generating a' with <a', b> = 0 whose slope comparisons agree
// with those of a (deg_{a'} is a positive multiple of deg_a). Requires a
// generating and rank(b) > 0. With A = <a, b> nonzero, twists a by the
// degree-r pullback class for the smallest |r| flipping the sign of
// B = A - r*rank(a)*rank(b), preferring positive r on ties, and returns
// |B|*a + |A|*(a tensor O(r)).
NumericalInvariant orthogonalize(const NumericalInvariant& a,
                                 const NumericalInvariant& b);

// Summands grouped by slope, blocks ordered by strictly decreasing slope.
// Requires rank(a) > 0.
HNType hn_type(const NumericalInvariant& a, const LineSum& bundle);

// Top block slope of hn_type: max_i mu_a(L_i).
Rational mu_max_sum(const NumericalInvariant& a, const LineSum& bundle);

struct BoundednessThresholds {
  Rational ext1_threshold;    // mu_{a,max} of the bundle twisted by omega
  Rational globgen_threshold; // ext1_threshold + rank(E)/rank(F)
};

// Slope thresholds above which Ext^1-vanishing and global generation are
// guaranteed. Requires rank(a) > 0 and rank(total_invariant) > 0.
BoundednessThresholds
boundedness_thresholds(const NumericalInvariant& a, const LineSum& bundle,
                       const NumericalInvariant& total_invariant);

} // namespace stacky
