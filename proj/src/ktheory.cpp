#include "stacky/ktheory.hpp"

#include <algorithm>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

// Twist multiset at each point for one of the two signed parts of a
// decomposition: slot i repeated mult[i] times, ascending, padded to
// `lines` entries with slot 0.
std::vector<std::vector<int>> twist_columns(const StackyCurve& curve,
                                            const std::vector<std::vector<Int>>& mult,
                                            const Int& lines) {
  std::vector<std::vector<int>> columns;
  const auto n = static_cast<std::size_t>(static_cast<long long>(lines));
  columns.assign(n, std::vector<int>(curve.num_points(), 0));
  for (std::size_t p = 0; p < curve.num_points(); ++p) {
    std::size_t row = 0;
    Int used = 0;
    for (const auto& m : mult[p]) {
      used += m;
    }
    // Slot-0 padding first keeps the multiset ascending.
    for (Int pad = lines - used; pad > 0; --pad) {
      columns[row++][p] = 0;
    }
    for (std::size_t slot = 0; slot < mult[p].size(); ++slot) {
      for (Int k = 0; k < mult[p][slot]; ++k) {
        columns[row++][p] = static_cast<int>(slot);
      }
    }
  }
  return columns;
}

void add_line_terms(std::vector<std::pair<Int, LineBundleClass>>& terms,
                    const CurveRef& curve,
                    const std::vector<std::vector<int>>& columns, int sign) {
  for (const auto& twists : columns) {
    LineBundleClass cls(curve, 0, twists);
    auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) {
      return t.second == cls;
    });
    if (it == terms.end()) {
      terms.emplace_back(Int(sign), std::move(cls));
    } else {
      it->first += sign;
    }
  }
}

} // namespace

NumericalInvariant invariant_of_line(const LineBundleClass& line) {
  const auto& curve = line.curve();
  std::vector<std::vector<Int>> mult(curve->num_points());
  for (std::size_t p = 0; p < curve->num_points(); ++p) {
    mult[p].assign(static_cast<std::size_t>(curve->order(p)), Int(0));
    mult[p][static_cast<std::size_t>(line.twist(p))] = 1;
  }
  return NumericalInvariant(curve, 1, line.coarse_degree(), std::move(mult));
}

NumericalInvariant structure_class(const CurveRef& curve) {
  return invariant_of_line(trivial_class(curve));
}

NumericalInvariant skyscraper_class(const CurveRef& curve) {
  std::vector<std::vector<Int>> mult(curve->num_points());
  for (std::size_t p = 0; p < curve->num_points(); ++p) {
    mult[p].assign(static_cast<std::size_t>(curve->order(p)), Int(0));
  }
  return NumericalInvariant(curve, 0, 1, std::move(mult));
}

NumericalInvariant zero_class(const CurveRef& curve) {
  std::vector<std::vector<Int>> mult(curve->num_points());
  for (std::size_t p = 0; p < curve->num_points(); ++p) {
    mult[p].assign(static_cast<std::size_t>(curve->order(p)), Int(0));
  }
  return NumericalInvariant(curve, 0, 0, std::move(mult));
}

NumericalInvariant
combine(const std::vector<std::pair<Int, NumericalInvariant>>& terms) {
  if (terms.empty()) {
    throw ValidationError("combine: empty term list");
  }
  const auto& curve = terms.front().second.curve();
  Int rank = 0;
  Int degree = 0;
  std::vector<std::vector<Int>> mult(curve->num_points());
  for (std::size_t p = 0; p < curve->num_points(); ++p) {
    mult[p].assign(static_cast<std::size_t>(curve->order(p)), Int(0));
  }
  for (const auto& [coeff, value] : terms) {
    require_same_curve(*curve, *value.curve(), "combine");
    rank += coeff * value.rank();
    degree += coeff * value.coarse_degree();
    for (std::size_t p = 0; p < mult.size(); ++p) {
      for (std::size_t i = 0; i < mult[p].size(); ++i) {
        mult[p][i] += coeff * value.mult(p, i);
      }
    }
  }
  return NumericalInvariant(curve, std::move(rank), std::move(degree),
                            std::move(mult));
}

GeneratorCombination decompose(const NumericalInvariant& value) {
  const auto& curve = value.curve();
  const std::size_t n = curve->num_points();

  // Split into positive and negative parts sharing a common positive rank:
  // plus_rank is the largest per-point sum of positive entries (at least the
  // rank), each part padded with slot-0 multiplicity to that rank.
  Int plus_rank = value.rank() > 0 ? value.rank() : Int(0);
  for (std::size_t p = 0; p < n; ++p) {
    Int pos = 0;
    for (const auto& m : value.mult_vector(p)) {
      if (m > 0) {
        pos += m;
      }
    }
    plus_rank = std::max(plus_rank, pos);
  }
  const Int minus_rank = plus_rank - value.rank();

  std::vector<std::vector<Int>> plus(n), minus(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto& m = value.mult_vector(p);
    plus[p].assign(m.size(), Int(0));
    minus[p].assign(m.size(), Int(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) {
        plus[p][i] = m[i];
      } else {
        minus[p][i] = -m[i];
      }
    }
  }

  GeneratorCombination result;
  result.delta_coefficient = value.coarse_degree();
  if (plus_rank > 0) {
    add_line_terms(result.line_terms, curve,
                   twist_columns(*curve, plus, plus_rank), 1);
  }
  if (minus_rank > 0) {
    add_line_terms(result.line_terms, curve,
                   twist_columns(*curve, minus, minus_rank), -1);
  }
  std::erase_if(result.line_terms,
                [](const auto& t) { return t.first == 0; });
  std::sort(result.line_terms.begin(), result.line_terms.end(),
            [](const auto& a, const auto& b) {
              return canonical_less(a.second, b.second);
            });
  return result;
}

NumericalInvariant recompose(const CurveRef& curve,
                             const GeneratorCombination& combination) {
  std::vector<std::pair<Int, NumericalInvariant>> terms;
  terms.reserve(combination.line_terms.size() + 1);
  for (const auto& [coeff, line] : combination.line_terms) {
    terms.emplace_back(coeff, invariant_of_line(line));
  }
  terms.emplace_back(combination.delta_coefficient, skyscraper_class(curve));
  return combine(terms);
}

Int structure_pairing(const NumericalInvariant& a) {
  const auto& curve = a.curve();
  Int result = a.rank() * (1 - curve->coarse_genus()) - a.coarse_degree();
  for (std::size_t p = 0; p < curve->num_points(); ++p) {
    result -= a.rank() - a.mult(p, 0);
  }
  return result;
}

Int degree_wrt(const NumericalInvariant& a, const NumericalInvariant& c) {
  require_same_curve(*a.curve(), *c.curve(), "degree_wrt");
  Int result = a.rank() * c.coarse_degree();
  for (std::size_t p = 0; p < a.curve()->num_points(); ++p) {
    Int partial = 0;
    for (std::size_t i = 1; i < a.mult_vector(p).size(); ++i) {
      partial += a.mult(p, i);
      result += partial * c.mult(p, i);
    }
  }
  return result;
}

Int euler_pair(const NumericalInvariant& a, const NumericalInvariant& b) {
  require_same_curve(*a.curve(), *b.curve(), "euler_pair");
  return degree_wrt(a, b) + b.rank() * structure_pairing(a);
}

Int euler_pair_generators(const NumericalInvariant& a,
                          const NumericalInvariant& b) {
  require_same_curve(*a.curve(), *b.curve(), "euler_pair");
  const auto da = decompose(a);
  const auto db = decompose(b);
  const Int genus = a.curve()->coarse_genus();
  Int result = 0;
  for (const auto& [ci, li] : da.line_terms) {
    for (const auto& [cj, lj] : db.line_terms) {
      Int crossings = 0;
      for (std::size_t p = 0; p < li.twists().size(); ++p) {
        if (lj.twist(p) < li.twist(p)) {
          ++crossings;
        }
      }
      result += ci * cj *
                (lj.coarse_degree() - li.coarse_degree() + 1 - genus - crossings);
    }
    result += ci * db.delta_coefficient; // <L, delta> = 1
  }
  for (const auto& [cj, lj] : db.line_terms) {
    (void)lj;
    result -= da.delta_coefficient * cj; // <delta, L> = -1
  }
  return result;
}

std::vector<std::vector<Rational>> weights(const NumericalInvariant& a) {
  if (a.rank() <= 0) {
    throw DomainError("weights: rank must be positive");
  }
  std::vector<std::vector<Rational>> result(a.curve()->num_points());
  for (std::size_t p = 0; p < result.size(); ++p) {
    const auto& m = a.mult_vector(p);
    result[p].assign(m.size(), Rational(0));
    Int partial = 0;
    for (std::size_t i = 1; i < m.size(); ++i) {
      partial += m[i];
      result[p][i] = Rational(partial, a.rank());
    }
  }
  return result;
}

LineBundleClass tensor(const LineBundleClass& a, const LineBundleClass& b) {
  require_same_curve(*a.curve(), *b.curve(), "tensor");
  const auto& curve = a.curve();
  Int degree = a.coarse_degree() + b.coarse_degree();
  std::vector<int> twists(curve->num_points());
  for (std::size_t p = 0; p < twists.size(); ++p) {
    const int e = curve->order(p);
    const int sum = a.twist(p) + b.twist(p);
    if (sum >= e) {
      ++degree; // the e-fold twist at p is the pullback of a degree-1 class
      twists[p] = sum - e;
    } else {
      twists[p] = sum;
    }
  }
  return LineBundleClass(curve, std::move(degree), std::move(twists));
}

NumericalInvariant tensor_line(const NumericalInvariant& a,
                               const LineBundleClass& line) {
  require_same_curve(*a.curve(), *line.curve(), "tensor_line");
  const auto& curve = a.curve();
  Int degree = a.coarse_degree() + a.rank() * line.coarse_degree();
  std::vector<std::vector<Int>> mult(curve->num_points());
  for (std::size_t p = 0; p < mult.size(); ++p) {
    const int e = curve->order(p);
    const int shift = line.twist(p);
    mult[p].assign(static_cast<std::size_t>(e), Int(0));
    for (int i = 0; i < e; ++i) {
      mult[p][static_cast<std::size_t>((i + shift) % e)] = a.mult(p, i);
      if (i + shift >= e) {
        degree += a.mult(p, i);
      }
    }
  }
  return NumericalInvariant(curve, a.rank(), std::move(degree),
                            std::move(mult));
}

LineBundleClass dual_line(const LineBundleClass& line) {
  const auto& curve = line.curve();
  Int degree = -line.coarse_degree();
  std::vector<int> twists(curve->num_points(), 0);
  for (std::size_t p = 0; p < twists.size(); ++p) {
    if (line.twist(p) > 0) {
      --degree;
      twists[p] = curve->order(p) - line.twist(p);
    }
  }
  return LineBundleClass(curve, std::move(degree), std::move(twists));
}

NumericalInvariant dual(const NumericalInvariant& a) {
  const auto& curve = a.curve();
  Int degree = -a.coarse_degree();
  std::vector<std::vector<Int>> mult(curve->num_points());
  for (std::size_t p = 0; p < mult.size(); ++p) {
    const int e = curve->order(p);
    mult[p].assign(static_cast<std::size_t>(e), Int(0));
    mult[p][0] = a.mult(p, 0);
    for (int i = 1; i < e; ++i) {
      mult[p][static_cast<std::size_t>(e - i)] = a.mult(p, i);
      degree -= a.mult(p, i); // each nonzero twist dualizes with a carry
    }
  }
  return NumericalInvariant(curve, a.rank(), std::move(degree),
                            std::move(mult));
}

NumericalInvariant serre_dual(const NumericalInvariant& a) {
  return tensor_line(dual(a), canonical_class(a.curve()));
}

bool is_positive(const NumericalInvariant& a) {
  if (a.rank() <= 0) {
    return false;
  }
  for (const auto& point : a.multiplicities()) {
    for (const auto& m : point) {
      if (m < 0) {
        return false;
      }
    }
  }
  return true;
}

bool is_generating(const NumericalInvariant& a) {
  if (a.rank() <= 0) {
    return false;
  }
  for (const auto& point : a.multiplicities()) {
    for (const auto& m : point) {
      if (m <= 0) {
        return false;
      }
    }
  }
  return true;
}

} // namespace stacky
