#pragma once

#include <utility>
#include <vector>

#include "stacky/invariant.hpp"

namespace stacky {

// Rank 1, the line's coarse degree, indicator multiplicity vector with the 1
// in the slot given by the twist.
NumericalInvariant invariant_of_line(const LineBundleClass& line);

// Class of the structure sheaf.
NumericalInvariant structure_class(const CurveRef& curve);

// Class of a length-1 torsion sheaf at a non-stacky point: rank 0, coarse
// degree 1, all multiplicities zero.
NumericalInvariant skyscraper_class(const CurveRef& curve);

NumericalInvariant zero_class(const CurveRef& curve);

// Componentwise integer linear combination; the inputs must share one curve
// and the list must be nonempty.
NumericalInvariant
combine(const std::vector<std::pair<Int, NumericalInvariant>>& terms);

// Deterministic decomposition into degree-zero line classes plus a multiple
// of the skyscraper class; recomposition via combine reproduces the input
// exactly. Positive and negative parts are decomposed separately, pairing
// sorted twist multisets across points.
GeneratorCombination decompose(const NumericalInvariant& value);

NumericalInvariant recompose(const CurveRef& curve,
                             const GeneratorCombination& combination);

// Euler pairing <a, b>, closed form:
//   r_a*d_b + sum_p sum_{i>=1} (m_{p,1}(a)+...+m_{p,i}(a)) * m_{p,i}(b)
//     + r_b * (r_a*(1-g) - d_a - sum_p (r_a - m_{p,0}(a))).
Int euler_pair(const NumericalInvariant& a, const NumericalInvariant& b);

// The same pairing computed independently by decomposing both arguments and
// pairing generators:
//   <L_i, L_j> = (d_j - d_i) + 1 - g - #{p : a_{p,j} < a_{p,i}},
//   <L, delta> = 1, <delta, L> = -1, <delta, delta> = 0.
// Must agree with euler_pair on every pair of invariants.
Int euler_pair_generators(const NumericalInvariant& a,
                          const NumericalInvariant& b);

// <a, [O]>.
Int structure_pairing(const NumericalInvariant& a);

// deg_a(c) = r_a*d_c + sum_p sum_{i>=1} (m_{p,1}(a)+...+m_{p,i}(a)) * m_{p,i}(c).
Int degree_wrt(const NumericalInvariant& a, const NumericalInvariant& c);

// w_{p,0} = 0 and w_{p,i} = (m_{p,1}+...+m_{p,i}) / rank for 1 <= i < e_p.
// Requires rank > 0.
std::vector<std::vector<Rational>> weights(const NumericalInvariant& a);

// Twisting rule on generators, extended additively: a line class gains the
// twists componentwise mod e_p with a degree carry at each overflowing
// point; the skyscraper class is unchanged.
LineBundleClass tensor(const LineBundleClass& a, const LineBundleClass& b);
NumericalInvariant tensor_line(const NumericalInvariant& a,
                               const LineBundleClass& line);

// Dualization: L(d, a)^v = L(-d - #{p : a_p > 0}, (e - a) mod e) on line
// classes, delta^v = -delta, extended additively.
LineBundleClass dual_line(const LineBundleClass& line);
NumericalInvariant dual(const NumericalInvariant& a);

// SD(a) = a^v tensor omega; an involution.
NumericalInvariant serre_dual(const NumericalInvariant& a);

// rank > 0 and all multiplicities nonnegative.
bool is_positive(const NumericalInvariant& a);

// rank > 0 and every multiplicity strictly positive.
bool is_generating(const NumericalInvariant& a);

} // namespace stacky
