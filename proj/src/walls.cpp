#include "stacky/walls.hpp"

#include <algorithm>
#include <limits>

#include "stacky/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stacky {

namespace {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int thread_num() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// coef[p][i] = m_{p,1}(a) + ... + m_{p,i}(a); with these,
// deg_a(c) = rank(a) * d_c + sum_p sum_i coef[p][i] * m_{p,i}(c).
std::vector<std::vector<Int>> partial_sums(const NumericalInvariant& a) {
  std::vector<std::vector<Int>> coef(a.curve()->num_points());
  for (std::size_t p = 0; p < coef.size(); ++p) {
    const auto& m = a.mult_vector(p);
    coef[p].assign(m.size(), Int(0));
    for (std::size_t i = 1; i < m.size(); ++i) {
      coef[p][i] = coef[p][i - 1] + m[i];
    }
  }
  return coef;
}

Int pattern_term(const std::vector<std::vector<Int>>& coef,
                 const std::vector<std::vector<Int>>& pattern) {
  Int s = 0;
  for (std::size_t p = 0; p < pattern.size(); ++p) {
    for (std::size_t i = 1; i < pattern[p].size(); ++i) {
      s += coef[p][i] * pattern[p][i];
    }
  }
  return s;
}

// Largest d with d * den < num, for den > 0.
Int largest_int_below(const Int& num, const Int& den) {
  Int f = floor_div(num, den);
  if (f * den == num) {
    --f;
  }
  return f;
}

// All vectors v with 0 <= v[i] <= caps[i] and sum v = total, lex order.
void compositions_rec(const std::vector<Int>& caps,
                      const std::vector<Int>& suffix, std::size_t slot,
                      const Int& remaining, std::vector<Int>& current,
                      std::vector<std::vector<Int>>& out) {
  if (remaining > suffix[slot]) {
    return;
  }
  if (slot + 1 == caps.size()) {
    current[slot] = remaining;
    out.push_back(current);
    return;
  }
  const Int top = remaining < caps[slot] ? remaining : caps[slot];
  for (Int v = 0; v <= top; ++v) {
    current[slot] = v;
    compositions_rec(caps, suffix, slot + 1, remaining - v, current, out);
  }
}

std::vector<std::vector<Int>> compositions(const std::vector<Int>& caps,
                                           const Int& total) {
  std::vector<Int> suffix(caps.size() + 1, Int(0));
  for (std::size_t i = caps.size(); i > 0; --i) {
    suffix[i - 1] = suffix[i] + caps[i - 1];
  }
  std::vector<std::vector<Int>> out;
  std::vector<Int> current(caps.size(), Int(0));
  if (!caps.empty()) {
    compositions_rec(caps, suffix, 0, total, current, out);
  }
  return out;
}

// Per-point composition tables for rank r below b, or empty when some point
// admits none.
std::vector<std::vector<std::vector<Int>>>
pattern_tables(const NumericalInvariant& b, const Int& r) {
  std::vector<std::vector<std::vector<Int>>> tables(b.curve()->num_points());
  for (std::size_t p = 0; p < tables.size(); ++p) {
    tables[p] = compositions(b.mult_vector(p), r);
    if (tables[p].empty()) {
      return {};
    }
  }
  return tables;
}

long long flat_size(const std::vector<std::vector<std::vector<Int>>>& tables) {
  long long n = 1;
  for (const auto& t : tables) {
    if (t.empty()) {
      return 0;
    }
    if (n > std::numeric_limits<long long>::max() /
                static_cast<long long>(t.size())) {
      return -1; // too large to index; callers fall back to recursion
    }
    n *= static_cast<long long>(t.size());
  }
  return n;
}

std::vector<std::vector<Int>>
pattern_at(const std::vector<std::vector<std::vector<Int>>>& tables,
           long long index, std::vector<std::size_t>& digits) {
  std::vector<std::vector<Int>> pattern(tables.size());
  digits.assign(tables.size(), 0);
  for (std::size_t p = 0; p < tables.size(); ++p) {
    const auto size = static_cast<long long>(tables[p].size());
    digits[p] = static_cast<std::size_t>(index % size);
    pattern[p] = tables[p][digits[p]];
    index /= size;
  }
  return pattern;
}

// Little-endian increment of the mixed-radix index, refreshing only the
// pattern entries whose digit changed.
void advance_pattern(const std::vector<std::vector<std::vector<Int>>>& tables,
                     std::vector<std::size_t>& digits,
                     std::vector<std::vector<Int>>& pattern) {
  for (std::size_t p = 0; p < tables.size(); ++p) {
    if (++digits[p] < tables[p].size()) {
      pattern[p] = tables[p][digits[p]];
      return;
    }
    digits[p] = 0;
    pattern[p] = tables[p][0];
  }
}

// Splits [0, n) into chunks and walks each chunk with the incremental
// advance; fn(pattern, thread) runs once per pattern.
template <typename Fn>
void parallel_patterns(const std::vector<std::vector<std::vector<Int>>>& tables,
                       long long n, Fn&& fn) {
  const long long chunk =
      std::max<long long>(128, n / (8 * max_threads()) + 1);
#pragma omp parallel for schedule(dynamic)
  for (long long start = 0; start < n; start += chunk) {
    const int thread = thread_num();
    const long long stop = std::min(n, start + chunk);
    std::vector<std::size_t> digits;
    auto pattern = pattern_at(tables, start, digits);
    for (long long idx = start;;) {
      fn(pattern, thread);
      if (++idx >= stop) {
        break;
      }
      advance_pattern(tables, digits, pattern);
    }
  }
}

// Serial recursive walk over all patterns of rank r below b.
template <typename Fn>
void for_each_pattern_rec(const NumericalInvariant& b, const Int& r,
                          std::size_t point, std::vector<std::vector<Int>>& pattern,
                          Fn&& fn) {
  if (point == b.curve()->num_points()) {
    fn(pattern);
    return;
  }
  auto comps = compositions(b.mult_vector(point), r);
  for (auto& c : comps) {
    pattern[point] = std::move(c);
    for_each_pattern_rec(b, r, point + 1, pattern, fn);
  }
}

template <typename Fn>
void for_each_pattern_serial(const NumericalInvariant& b, const Int& r, Fn&& fn) {
  std::vector<std::vector<Int>> pattern(b.curve()->num_points());
  for_each_pattern_rec(b, r, 0, pattern, fn);
}

void check_enumeration_inputs(const NumericalInvariant& b,
                              const NumericalInvariant& a,
                              const SubinvariantFilter& filter) {
  require_same_curve(*a.curve(), *b.curve(), "enumerate_subinvariants");
  if (!is_positive(b)) {
    throw DomainError("enumerate_subinvariants: total invariant must be positive");
  }
  if (a.rank() <= 0) {
    throw DomainError("enumerate_subinvariants: polarization rank must be positive");
  }
  if (filter.ell < 0) {
    throw ValidationError("subinvariant filter: ell must be >= 0");
  }
  if (filter.degree_floor && filter.degree_ceiling &&
      *filter.degree_floor > *filter.degree_ceiling) {
    throw ValidationError("subinvariant filter: degree floor exceeds ceiling");
  }
}

struct DegreeWindow {
  Int lo;
  Int hi;

  bool empty() const { return lo > hi; }
};

DegreeWindow degree_window(const SubinvariantFilter& filter, const Int& alpha_rank,
                           const Int& chi_bound, const Int& rank,
                           const Int& term) {
  DegreeWindow w;
  w.lo = filter.degree_floor ? *filter.degree_floor : Int(-filter.ell * rank);
  // Default ceiling: keep <a, c> < 0, i.e. rank(a)*d + term < chi_bound.
  w.hi = filter.degree_ceiling ? *filter.degree_ceiling
                               : largest_int_below(chi_bound - term, alpha_rank);
  return w;
}

void sort_canonical(std::vector<NumericalInvariant>& values) {
  std::sort(values.begin(), values.end(),
            [](const auto& x, const auto& y) { return canonical_less(x, y); });
}

void check_wall_inputs(const NumericalInvariant& a, const NumericalInvariant& b,
                       const char* what) {
  require_same_curve(*a.curve(), *b.curve(), what);
  if (a.rank() <= 0) {
    throw DomainError(std::string(what) + ": polarization rank must be positive");
  }
  if (!is_positive(b)) {
    throw DomainError(std::string(what) + ": total invariant must be positive");
  }
}

// Pinned coarse degree for the slope equality mu_a(c) = mu_a(b) on a fixed
// multiplicity pattern, if it is integral.
std::optional<Int> pinned_degree(const Int& alpha_rank, const Int& rank_b,
                                 const Int& deg_a_b, const Int& rank_c,
                                 const Int& term) {
  const Int num = rank_c * deg_a_b - rank_b * term;
  const Int den = rank_b * alpha_rank;
  if (num % den != 0) {
    return std::nullopt;
  }
  return num / den;
}

} // namespace

std::vector<NumericalInvariant>
enumerate_subinvariants_serial(const NumericalInvariant& b,
                               const NumericalInvariant& a,
                               const SubinvariantFilter& filter) {
  check_enumeration_inputs(b, a, filter);
  const auto coef = partial_sums(a);
  std::vector<NumericalInvariant> out;
  for (Int r = 1; r < b.rank(); ++r) {
    const Int chi_bound = -r * structure_pairing(a);
    for_each_pattern_serial(b, r, [&](const std::vector<std::vector<Int>>& pattern) {
      const Int term = pattern_term(coef, pattern);
      const auto w = degree_window(filter, a.rank(), chi_bound, r, term);
      for (Int d = w.lo; d <= w.hi; ++d) {
        out.emplace_back(b.curve(), r, d, pattern);
      }
    });
  }
  sort_canonical(out);
  return out;
}

std::vector<NumericalInvariant>
enumerate_subinvariants(const NumericalInvariant& b, const NumericalInvariant& a,
                        const SubinvariantFilter& filter) {
  check_enumeration_inputs(b, a, filter);
  const auto coef = partial_sums(a);
  std::vector<std::vector<NumericalInvariant>> buckets(
      static_cast<std::size_t>(max_threads()));
  for (Int r = 1; r < b.rank(); ++r) {
    const Int chi_bound = -r * structure_pairing(a);
    const auto tables = pattern_tables(b, r);
    if (b.curve()->num_points() > 0 && tables.empty()) {
      continue;
    }
    const long long n = flat_size(tables);
    if (n == 0) {
      continue;
    }
    auto handle = [&](const std::vector<std::vector<Int>>& pattern,
                      std::vector<NumericalInvariant>& sink) {
      const Int term = pattern_term(coef, pattern);
      const auto w = degree_window(filter, a.rank(), chi_bound, r, term);
      for (Int d = w.lo; d <= w.hi; ++d) {
        sink.emplace_back(b.curve(), r, d, pattern);
      }
    };
    if (n < 0) {
      for_each_pattern_serial(b, r, [&](const auto& pattern) {
        handle(pattern, buckets[0]);
      });
      continue;
    }
    parallel_patterns(tables, n, [&](const auto& pattern, int thread) {
      handle(pattern, buckets[static_cast<std::size_t>(thread)]);
    });
  }
  std::vector<NumericalInvariant> out;
  for (auto& bucket : buckets) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  sort_canonical(out);
  return out;
}

WallReport is_on_wall_serial(const NumericalInvariant& a,
                             const NumericalInvariant& b) {
  check_wall_inputs(a, b, "is_on_wall");
  const auto coef = partial_sums(a);
  const Int deg_a_b = degree_wrt(a, b);
  WallReport report;
  for (Int r = 1; r < b.rank(); ++r) {
    for_each_pattern_serial(b, r, [&](const std::vector<std::vector<Int>>& pattern) {
      const Int term = pattern_term(coef, pattern);
      if (auto d = pinned_degree(a.rank(), b.rank(), deg_a_b, r, term)) {
        report.witnesses.emplace_back(b.curve(), r, *d, pattern);
      }
    });
  }
  sort_canonical(report.witnesses);
  report.on_wall = !report.witnesses.empty();
  return report;
}

WallReport is_on_wall(const NumericalInvariant& a, const NumericalInvariant& b) {
  check_wall_inputs(a, b, "is_on_wall");
  const auto coef = partial_sums(a);
  const Int deg_a_b = degree_wrt(a, b);
  std::vector<std::vector<NumericalInvariant>> buckets(
      static_cast<std::size_t>(max_threads()));
  for (Int r = 1; r < b.rank(); ++r) {
    const auto tables = pattern_tables(b, r);
    if (b.curve()->num_points() > 0 && tables.empty()) {
      continue;
    }
    const long long n = flat_size(tables);
    if (n == 0) {
      continue;
    }
    auto handle = [&](const std::vector<std::vector<Int>>& pattern,
                      std::vector<NumericalInvariant>& sink) {
      const Int term = pattern_term(coef, pattern);
      if (auto d = pinned_degree(a.rank(), b.rank(), deg_a_b, r, term)) {
        sink.emplace_back(b.curve(), r, *d, pattern);
      }
    };
    if (n < 0) {
      for_each_pattern_serial(b, r, [&](const auto& pattern) {
        handle(pattern, buckets[0]);
      });
      continue;
    }
    parallel_patterns(tables, n, [&](const auto& pattern, int thread) {
      handle(pattern, buckets[static_cast<std::size_t>(thread)]);
    });
  }
  WallReport report;
  for (auto& bucket : buckets) {
    report.witnesses.insert(report.witnesses.end(),
                            std::make_move_iterator(bucket.begin()),
                            std::make_move_iterator(bucket.end()));
  }
  sort_canonical(report.witnesses);
  report.on_wall = !report.witnesses.empty();
  return report;
}

namespace {

void check_segment_inputs(const NumericalInvariant& a0,
                          const NumericalInvariant& a1,
                          const NumericalInvariant& b,
                          const std::pair<Int, Int>& degree_range) {
  require_same_curve(*a0.curve(), *a1.curve(), "walls_on_segment");
  require_same_curve(*a0.curve(), *b.curve(), "walls_on_segment");
  if (a0 == a1) {
    throw DomainError("walls_on_segment: degenerate segment (endpoints equal)");
  }
  if (a0.rank() <= 0 || a1.rank() <= 0) {
    throw DomainError(
        "walls_on_segment: polarization rank must stay positive on the segment");
  }
  if (!is_positive(b)) {
    throw DomainError("walls_on_segment: total invariant must be positive");
  }
  if (degree_range.first > degree_range.second) {
    throw ValidationError("walls_on_segment: empty degree range");
  }
}

struct SegmentHit {
  bool whole = false;
  Rational t; // meaningful when !whole
  NumericalInvariant witness;
};

std::vector<SegmentWall> group_segment_hits(std::vector<SegmentHit>&& hits) {
  std::vector<NumericalInvariant> whole;
  std::map<Rational, std::vector<NumericalInvariant>> at;
  for (auto& hit : hits) {
    if (hit.whole) {
      whole.push_back(std::move(hit.witness));
    } else {
      at[hit.t].push_back(std::move(hit.witness));
    }
  }
  std::vector<SegmentWall> out;
  if (!whole.empty()) {
    sort_canonical(whole);
    out.push_back({Rational(0), Rational(1), {true, std::move(whole)}});
  }
  for (auto& [t, witnesses] : at) {
    sort_canonical(witnesses);
    out.push_back({t, t, {true, std::move(witnesses)}});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.t_begin != y.t_begin) {
      return x.t_begin < y.t_begin;
    }
    return x.t_end < y.t_end;
  });
  return out;
}

} // namespace

std::vector<SegmentWall>
walls_on_segment_serial(const NumericalInvariant& a0,
                        const NumericalInvariant& a1,
                        const NumericalInvariant& b,
                        const std::pair<Int, Int>& degree_range) {
  check_segment_inputs(a0, a1, b, degree_range);
  const auto coef0 = partial_sums(a0);
  const auto coef1 = partial_sums(a1);
  const Int deg0_b = degree_wrt(a0, b);
  const Int deg1_b = degree_wrt(a1, b);
  std::vector<SegmentHit> hits;
  for (Int r = 1; r < b.rank(); ++r) {
    for_each_pattern_serial(b, r, [&](const std::vector<std::vector<Int>>& pattern) {
      const Int term0 = pattern_term(coef0, pattern);
      const Int term1 = pattern_term(coef1, pattern);
      for (Int d = degree_range.first; d <= degree_range.second; ++d) {
        const Int f0 = b.rank() * (a0.rank() * d + term0) - r * deg0_b;
        const Int f1 = b.rank() * (a1.rank() * d + term1) - r * deg1_b;
        if (f0 == 0 && f1 == 0) {
          hits.push_back({true, Rational(0),
                          NumericalInvariant(b.curve(), r, d, pattern)});
        } else if (f0 != f1) {
          const Rational t = make_ratio(f0, f0 - f1);
          if (t >= 0 && t <= 1) {
            hits.push_back({false, t,
                            NumericalInvariant(b.curve(), r, d, pattern)});
          }
        }
      }
    });
  }
  return group_segment_hits(std::move(hits));
}

std::vector<SegmentWall>
walls_on_segment(const NumericalInvariant& a0, const NumericalInvariant& a1,
                 const NumericalInvariant& b,
                 const std::pair<Int, Int>& degree_range) {
  check_segment_inputs(a0, a1, b, degree_range);
  const auto coef0 = partial_sums(a0);
  const auto coef1 = partial_sums(a1);
  const Int deg0_b = degree_wrt(a0, b);
  const Int deg1_b = degree_wrt(a1, b);
  std::vector<std::vector<SegmentHit>> buckets(
      static_cast<std::size_t>(max_threads()));
  for (Int r = 1; r < b.rank(); ++r) {
    const auto tables = pattern_tables(b, r);
    if (b.curve()->num_points() > 0 && tables.empty()) {
      continue;
    }
    const long long n = flat_size(tables);
    if (n == 0) {
      continue;
    }
    auto handle = [&](const std::vector<std::vector<Int>>& pattern,
                      std::vector<SegmentHit>& sink) {
      const Int term0 = pattern_term(coef0, pattern);
      const Int term1 = pattern_term(coef1, pattern);
      for (Int d = degree_range.first; d <= degree_range.second; ++d) {
        const Int f0 = b.rank() * (a0.rank() * d + term0) - r * deg0_b;
        const Int f1 = b.rank() * (a1.rank() * d + term1) - r * deg1_b;
        if (f0 == 0 && f1 == 0) {
          sink.push_back({true, Rational(0),
                          NumericalInvariant(b.curve(), r, d, pattern)});
        } else if (f0 != f1) {
          const Rational t = make_ratio(f0, f0 - f1);
          if (t >= 0 && t <= 1) {
            sink.push_back({false, t,
                            NumericalInvariant(b.curve(), r, d, pattern)});
          }
        }
      }
    };
    if (n < 0) {
      for_each_pattern_serial(b, r, [&](const auto& pattern) {
        handle(pattern, buckets[0]);
      });
      continue;
    }
    parallel_patterns(tables, n, [&](const auto& pattern, int thread) {
      handle(pattern, buckets[static_cast<std::size_t>(thread)]);
    });
  }
  std::vector<SegmentHit> hits;
  for (auto& bucket : buckets) {
    hits.insert(hits.end(), std::make_move_iterator(bucket.begin()),
                std::make_move_iterator(bucket.end()));
  }
  return group_segment_hits(std::move(hits));
}

namespace {

void check_hom_inputs(const NumericalInvariant& a, const NumericalInvariant& b,
                      const NumericalInvariant& eta) {
  require_same_curve(*a.curve(), *b.curve(), "hom_vanishing_bound");
  require_same_curve(*a.curve(), *eta.curve(), "hom_vanishing_bound");
  if (!is_generating(a)) {
    throw DomainError("hom_vanishing_bound: polarization must be generating");
  }
  if (!is_positive(b)) {
    throw DomainError("hom_vanishing_bound: total invariant must be positive");
  }
  if (euler_pair(a, b) != 0) {
    throw DomainError("hom_vanishing_bound: polarization must be orthogonal "
                      "to the total invariant");
  }
}

} // namespace

Int hom_vanishing_bound_serial(const NumericalInvariant& a,
                               const NumericalInvariant& b,
                               const NumericalInvariant& eta,
                               const SubinvariantFilter& filter) {
  check_hom_inputs(a, b, eta);
  const auto candidates = enumerate_subinvariants_serial(b, a, filter);
  bool any = false;
  Rational best(0);
  for (const auto& c : candidates) {
    const Int pairing = euler_pair(a, c);
    if (pairing >= 0) {
      continue;
    }
    const Rational q = make_ratio(euler_pair(c, c) - euler_pair(eta, c), pairing);
    if (!any || q > best) {
      best = q;
      any = true;
    }
  }
  if (!any) {
    return 1;
  }
  Int m = smallest_int_greater(best);
  if (m < 1) {
    m = 1;
  }
  return m;
}

// Fused pattern walk: every pairing in the quotient is linear in the
// candidate's degree for a fixed multiplicity pattern, and the diagonal
// <c,c> does not depend on the degree at all, so the maximization runs on
// plain integers without materializing candidates.
Int hom_vanishing_bound(const NumericalInvariant& a, const NumericalInvariant& b,
                        const NumericalInvariant& eta,
                        const SubinvariantFilter& filter) {
  check_hom_inputs(a, b, eta);
  if (filter.ell < 0) {
    throw ValidationError("subinvariant filter: ell must be >= 0");
  }
  if (filter.degree_floor && filter.degree_ceiling &&
      *filter.degree_floor > *filter.degree_ceiling) {
    throw ValidationError("subinvariant filter: degree floor exceeds ceiling");
  }
  const auto coef_a = partial_sums(a);
  const auto coef_eta = partial_sums(eta);
  const Int chi_a = structure_pairing(a);
  const Int chi_eta = structure_pairing(eta);
  const Int genus_excess = b.curve()->coarse_genus() - 1;

  const int nthreads = max_threads();
  std::vector<char> found(static_cast<std::size_t>(nthreads), 0);
  std::vector<Rational> best(static_cast<std::size_t>(nthreads), Rational(0));

  for (Int r = 1; r < b.rank(); ++r) {
    const Int chi_bound = -r * chi_a;
    const Int rank_square_term = genus_excess * r * r;
    const auto tables = pattern_tables(b, r);
    if (b.curve()->num_points() > 0 && tables.empty()) {
      continue;
    }
    const long long n = flat_size(tables);
    if (n == 0) {
      continue;
    }
    auto handle = [&](const std::vector<std::vector<Int>>& pattern, int thread) {
      const Int term_a = pattern_term(coef_a, pattern);
      const auto w = degree_window(filter, a.rank(), chi_bound, r, term_a);
      if (w.empty()) {
        return;
      }
      const Int term_eta = pattern_term(coef_eta, pattern);
      Int diagonal = rank_square_term;
      for (const auto& point : pattern) {
        Int suffix = 0;
        for (std::size_t i = point.size(); i > 1; --i) {
          suffix += point[i - 1];
          diagonal += point[i - 2] * suffix;
        }
      }
      const Int self_pairing = -diagonal;
      auto& local_found = found[static_cast<std::size_t>(thread)];
      auto& local_best = best[static_cast<std::size_t>(thread)];
      for (Int d = w.lo; d <= w.hi; ++d) {
        const Int pair_a = a.rank() * d + term_a + r * chi_a;
        if (pair_a >= 0) {
          continue; // possible only under explicit window overrides
        }
        const Int pair_eta = eta.rank() * d + term_eta + r * chi_eta;
        const Rational q = make_ratio(self_pairing - pair_eta, pair_a);
        if (!local_found || q > local_best) {
          local_best = q;
          local_found = 1;
        }
      }
    };
    if (n < 0) {
      for_each_pattern_serial(b, r,
                              [&](const auto& pattern) { handle(pattern, 0); });
      continue;
    }
    parallel_patterns(tables, n, handle);
  }

  bool any = false;
  Rational overall(0);
  for (int i = 0; i < nthreads; ++i) {
    if (found[static_cast<std::size_t>(i)] &&
        (!any || best[static_cast<std::size_t>(i)] > overall)) {
      overall = best[static_cast<std::size_t>(i)];
      any = true;
    }
  }
  if (!any) {
    return 1;
  }
  Int m = smallest_int_greater(overall);
  if (m < 1) {
    m = 1;
  }
  return m;
}

Int codim_bound(const NumericalInvariant& a, const NumericalInvariant& eta,
                const NumericalInvariant& c, const Int& m) {
  return euler_pair(c, c) - m * euler_pair(a, c) - euler_pair(eta, c);
}

BoundsReport effective_bounds(const CurveRef& curve,
                              const NumericalInvariant& b) {
  require_same_curve(*curve, *b.curve(), "effective_bounds");
  if (b.rank() <= 0) {
    throw DomainError("effective_bounds: rank must be positive");
  }
  const Rational genus_excess = stacky_genus(*curve) - 1;
  const Int r = b.rank();
  const Rational zero(0);

  BoundsReport report;
  report.kappa = genus_excess * r * r;
  if (report.kappa < zero) {
    report.kappa = zero;
  }
  report.kappa_plus = (genus_excess + Rational(1, r)) * r * r;
  if (report.kappa_plus < zero) {
    report.kappa_plus = zero;
  }
  report.basepoint_free_min_m = smallest_int_greater(genus_excess * r * r);
  if (report.basepoint_free_min_m < 1) {
    report.basepoint_free_min_m = 1;
  }
  report.finite_map_min_m =
      smallest_int_greater(4 * (genus_excess + Rational(1, 2 * r)) * r * r);
  if (report.finite_map_min_m < 1) {
    report.finite_map_min_m = 1;
  }
  report.stack_dim = -euler_pair(b, b);
  return report;
}

StackDims stack_dims(const NumericalInvariant& b1,
                     const NumericalInvariant& b2) {
  require_same_curve(*b1.curve(), *b2.curve(), "stack_dims");
  StackDims dims;
  dims.bun_dim_1 = -euler_pair(b1, b1);
  dims.bun_dim_2 = -euler_pair(b2, b2);
  dims.ext_stack_dim = dims.bun_dim_1 + dims.bun_dim_2 - euler_pair(b2, b1);
  return dims;
}

FormalPointSum detline_correction(const FormalPointSum& d,
                                  const FormalPointSum& d_prime) {
  FormalPointSum out;
  out.coefficients = d.coefficients;
  for (const auto& [label, coeff] : d_prime.coefficients) {
    out.coefficients[label] -= coeff;
  }
  std::erase_if(out.coefficients,
                [](const auto& entry) { return entry.second == 0; });
  return out;
}

} // namespace stacky
