#include "stacky/stability.hpp"

#include <algorithm>
#include <map>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

NumericalInvariant sum_of_lines(const std::vector<LineBundleClass>& lines) {
  if (lines.empty()) {
    throw ValidationError("line sum: needs at least one summand");
  }
  std::vector<std::pair<Int, NumericalInvariant>> terms;
  terms.reserve(lines.size());
  for (const auto& line : lines) {
    terms.emplace_back(1, invariant_of_line(line));
  }
  return combine(terms);
}

} // namespace

LineSum::LineSum(std::vector<LineBundleClass> summands)
    : summands_(std::move(summands)), total_(sum_of_lines(summands_)) {}

Rational slope(const NumericalInvariant& a, const NumericalInvariant& c) {
  if (a.rank() <= 0) {
    throw DomainError("slope: polarization rank must be positive");
  }
  if (c.rank() <= 0) {
    throw DomainError("slope: rank must be positive");
  }
  return Rational(degree_wrt(a, c), c.rank());
}

int slope_compare(const NumericalInvariant& a, const NumericalInvariant& b,
                  const NumericalInvariant& c) {
  if (a.rank() <= 0 || b.rank() <= 0 || c.rank() <= 0) {
    throw DomainError("slope_compare: ranks must be positive");
  }
  return sign_of(b.rank() * degree_wrt(a, c) - c.rank() * degree_wrt(a, b));
}

NumericalInvariant orthogonalize(const NumericalInvariant& a,
                                 const NumericalInvariant& b) {
  if (!is_generating(a)) {
    throw DomainError("orthogonalize: polarization must be generating");
  }
  if (b.rank() <= 0) {
    throw DomainError("orthogonalize: target rank must be positive");
  }
  const Int pairing = euler_pair(a, b);
  if (pairing == 0) {
    return a;
  }
  // B(r) = <a (x) O(r), b> = pairing - r * rank(a) * rank(b) is strictly
  // decreasing in r; pick the smallest |r| giving B the opposite sign.
  const Int step = a.rank() * b.rank();
  Int twist_degree;
  if (pairing > 0) {
    twist_degree = floor_div(pairing, step) + 1;
  } else {
    twist_degree = -(floor_div(-pairing, step) + 1);
  }
  const Int opposite = pairing - twist_degree * step;
  const auto twisted =
      tensor_line(a, make_line_class(a.curve(), twist_degree));
  return combine({{abs(opposite), a}, {abs(pairing), twisted}});
}

HNType hn_type(const NumericalInvariant& a, const LineSum& bundle) {
  if (a.rank() <= 0) {
    throw DomainError("hn_type: polarization rank must be positive");
  }
  require_same_curve(*a.curve(), *bundle.curve(), "hn_type");
  std::map<Rational, std::vector<LineBundleClass>, std::greater<Rational>>
      by_slope;
  for (const auto& line : bundle.summands()) {
    by_slope[slope(a, invariant_of_line(line))].push_back(line);
  }
  HNType result;
  result.blocks.reserve(by_slope.size());
  for (auto& [mu, lines] : by_slope) {
    std::sort(lines.begin(), lines.end(),
              [](const auto& x, const auto& y) { return canonical_less(x, y); });
    auto invariant = sum_of_lines(lines);
    result.blocks.push_back({mu, std::move(lines), std::move(invariant)});
  }
  return result;
}

Rational mu_max_sum(const NumericalInvariant& a, const LineSum& bundle) {
  return hn_type(a, bundle).blocks.front().slope;
}

BoundednessThresholds
boundedness_thresholds(const NumericalInvariant& a, const LineSum& bundle,
                       const NumericalInvariant& total_invariant) {
  if (a.rank() <= 0) {
    throw DomainError("boundedness_thresholds: polarization rank must be positive");
  }
  if (total_invariant.rank() <= 0) {
    throw DomainError("boundedness_thresholds: total rank must be positive");
  }
  require_same_curve(*a.curve(), *bundle.curve(), "boundedness_thresholds");
  require_same_curve(*a.curve(), *total_invariant.curve(),
                     "boundedness_thresholds");
  const auto omega = canonical_class(bundle.curve());
  std::vector<LineBundleClass> twisted;
  twisted.reserve(bundle.summands().size());
  for (const auto& line : bundle.summands()) {
    twisted.push_back(tensor(line, omega));
  }
  BoundednessThresholds result;
  result.ext1_threshold = mu_max_sum(a, LineSum(std::move(twisted)));
  result.globgen_threshold =
      result.ext1_threshold +
      Rational(Int(bundle.summands().size()), total_invariant.rank());
  return result;
}

} // namespace stacky
