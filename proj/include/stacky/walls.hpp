#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stacky/ktheory.hpp"

namespace stacky {

// Degree window for destabilizer enumeration. The default window is
// [-ell * rank, D_max] with D_max the largest degree keeping <a, c> < 0;
// explicit bounds override the corresponding end.
struct SubinvariantFilter {
  Int ell = 0; // >= 0
  std::optional<Int> degree_floor;
  std::optional<Int> degree_ceiling;
};

struct WallReport {
  bool on_wall = false;
  std::vector<NumericalInvariant> witnesses; // canonically sorted
};

// A wall met along a parameter segment: a single parameter value when
// t_begin == t_end, or an identically-satisfied wall covering [0, 1].
struct SegmentWall {
  Rational t_begin;
  Rational t_end;
  WallReport report;
};

struct BoundsReport {
  Rational kappa;
  Rational kappa_plus;
  Int basepoint_free_min_m; // smallest integer > (g_C - 1) r^2, at least 1
  Int finite_map_min_m;     // smallest integer > 4 (g_C - 1 + 1/(2r)) r^2, at least 1
  Int stack_dim;            // -<b, b>
};

struct StackDims {
  Int bun_dim_1;
  Int bun_dim_2;
  Int ext_stack_dim;
};

// Integer combination of points, stacky or free-form labels; zero
// coefficients are never stored.
struct FormalPointSum {
  std::map<std::string, Int> coefficients;

  bool operator==(const FormalPointSum& other) const {
    return coefficients == other.coefficients;
  }
};

// All c with 0 < rank(c) < rank(b), componentwise 0 <= m(c) <= m(b), the
// per-point sum-to-rank condition, and coarse degree inside the filter
// window. Output canonically sorted (rank, degree, multiplicities).
// Requires b positive and rank(a) > 0.
std::vector<NumericalInvariant>
enumerate_subinvariants(const NumericalInvariant& b,
                        const NumericalInvariant& a,
                        const SubinvariantFilter& filter);

// Straightforward single-threaded reference; must produce identical output.
std::vector<NumericalInvariant>
enumerate_subinvariants_serial(const NumericalInvariant& b,
                               const NumericalInvariant& a,
                               const SubinvariantFilter& filter);

// For each admissible multiplicity pattern the slope equality
// mu_a(c) = mu_a(b) pins at most one integral coarse degree; all integral
// solutions are reported as witnesses. Requires rank(a) > 0 and b positive.
WallReport is_on_wall(const NumericalInvariant& a, const NumericalInvariant& b);

WallReport is_on_wall_serial(const NumericalInvariant& a,
                             const NumericalInvariant& b);

// Scans a(t) = (1-t)*a0 + t*a1 for walls: for each candidate pattern and
// each coarse degree in degree_range the wall condition is linear in t;
// rational roots in [0, 1] are reported sorted by parameter, grouped by
// root, with identically-zero conditions reported as one [0, 1] wall.
// Requires a0 != a1, positive ranks at both ends, and b positive.
std::vector<SegmentWall>
walls_on_segment(const NumericalInvariant& a0, const NumericalInvariant& a1,
                 const NumericalInvariant& b,
                 const std::pair<Int, Int>& degree_range);

std::vector<SegmentWall>
walls_on_segment_serial(const NumericalInvariant& a0,
                        const NumericalInvariant& a1,
                        const NumericalInvariant& b,
                        const std::pair<Int, Int>& degree_range);

// Smallest integer m with m > (<c,c> - <eta,c>) / <a,c> for every enumerated
// c with <a,c> < 0, clamped to at least 1. Requires a generating, b positive
// and <a, b> = 0.
Int hom_vanishing_bound(const NumericalInvariant& a,
                        const NumericalInvariant& b,
                        const NumericalInvariant& eta,
                        const SubinvariantFilter& filter);

Int hom_vanishing_bound_serial(const NumericalInvariant& a,
                               const NumericalInvariant& b,
                               const NumericalInvariant& eta,
                               const SubinvariantFilter& filter);

// <c,c> - m*<a,c> - <eta,c>.
Int codim_bound(const NumericalInvariant& a, const NumericalInvariant& eta,
                const NumericalInvariant& c, const Int& m);

// Requires rank(b) > 0.
BoundsReport effective_bounds(const CurveRef& curve,
                              const NumericalInvariant& b);

StackDims stack_dims(const NumericalInvariant& b1, const NumericalInvariant& b2);

// Coefficient-wise difference d - d_prime with zero entries dropped.
FormalPointSum detline_correction(const FormalPointSum& d,
                                  const FormalPointSum& d_prime);

} // namespace stacky
