// Acceptance suite: runs every contract criterion end to end and prints one
// pass/fail line each. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "../cli_runner.hpp"
#include "../oracles.hpp"
#include "../test_util.hpp"

using namespace stacky;
using namespace stacky::testing;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& message) {
    if (ok) {
      detail = message;
    }
    ok = false;
  }

  void expect(bool condition, const std::string& message) {
    if (!condition) {
      fail(message);
    }
  }
};

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string describe(const NumericalInvariant& v) {
  std::ostringstream out;
  out << "(r=" << v.rank() << ", d=" << v.coarse_degree();
  for (std::size_t p = 0; p < v.curve()->num_points(); ++p) {
    out << ", " << v.curve()->label(p) << ":[";
    for (std::size_t i = 0; i < v.mult_vector(p).size(); ++i) {
      out << (i ? "," : "") << v.mult(p, i);
    }
    out << "]";
  }
  out << ")";
  return out.str();
}

// 1. Dual-route pairing equivalence, >= 1000 randomized triples, < 5 s.
Check criterion_dual_route() {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto a = random_invariant(rng, curve, 5, 10);
    auto b = random_invariant(rng, curve, 5, 10);
    if (euler_pair(a, b) != euler_pair_generators(a, b)) {
      check.fail("routes disagree on " + describe(a) + ", " + describe(b));
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 5.0,
               "runtime " + std::to_string(elapsed) + "s exceeds 5s");
  return check;
}

// 2. Diagonal Euler formula, >= 500 positive invariants plus the fixed case.
Check criterion_diagonal() {
  Check check;
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto f = random_positive(rng, curve, 1, 5);
    Int expected = (curve->coarse_genus() - 1) * f.rank() * f.rank();
    for (std::size_t p = 0; p < curve->num_points(); ++p) {
      const auto& m = f.mult_vector(p);
      for (std::size_t j = 0; j < m.size(); ++j) {
        for (std::size_t i = j + 1; i < m.size(); ++i) {
          expected += m[j] * m[i];
        }
      }
    }
    if (-euler_pair(f, f) != expected) {
      check.fail("diagonal mismatch on " + describe(f));
    }
  }
  auto curve = football();
  auto beta = inv(curve, 2, 0, {{1, 1}, {1, 1, 0}});
  check.expect(euler_pair(beta, beta) == 2, "fixed case <beta,beta> != 2");
  return check;
}

// 3. Pairing bounds with exact attainment at both ends.
Check criterion_pairing_bounds() {
  Check check;
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto a = random_positive(rng, curve, 1, 5);
    const Rational neg(-euler_pair(a, a));
    const Rational r2(a.rank() * a.rank());
    check.expect(neg >= Rational(curve->coarse_genus() - 1) * r2,
                 "left bound violated by " + describe(a));
    check.expect(neg <= (stacky_genus(*curve) - 1) * r2,
                 "right bound violated by " + describe(a));
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    const int rank = uniform(rng, 1, 5);
    // Single-slot multiplicities attain the left bound.
    std::vector<std::vector<Int>> mult(curve->num_points());
    for (std::size_t p = 0; p < mult.size(); ++p) {
      mult[p].assign(static_cast<std::size_t>(curve->order(p)), Int(0));
      mult[p][static_cast<std::size_t>(uniform(rng, 0, curve->order(p) - 1))] =
          rank;
    }
    auto concentrated =
        inv(curve, rank, uniform(rng, -10, 10), std::move(mult));
    check.expect(Rational(-euler_pair(concentrated, concentrated)) ==
                     Rational(curve->coarse_genus() - 1) * rank * rank,
                 "left bound not attained by " + describe(concentrated));
    // Balanced multiplicities (orders divide the rank) attain the right bound.
    Int balanced_rank = 1;
    for (const auto& point : curve->points()) {
      balanced_rank = std::lcm(static_cast<long long>(balanced_rank),
                               static_cast<long long>(point.order));
    }
    std::vector<std::vector<Int>> balanced(curve->num_points());
    for (std::size_t p = 0; p < balanced.size(); ++p) {
      balanced[p].assign(static_cast<std::size_t>(curve->order(p)),
                         balanced_rank / curve->order(p));
    }
    auto flat = inv(curve, balanced_rank, uniform(rng, -10, 10),
                    std::move(balanced));
    check.expect(Rational(-euler_pair(flat, flat)) ==
                     (stacky_genus(*curve) - 1) * balanced_rank * balanced_rank,
                 "right bound not attained by " + describe(flat));
  }
  return check;
}

// 4. Serre duality identity on >= 1000 pairs; serre_dual is an involution.
Check criterion_serre() {
  Check check;
  Rng rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto a = random_invariant(rng, curve, 5, 10);
    auto b = random_invariant(rng, curve, 5, 10);
    if (euler_pair(a, b) !=
        -euler_pair(b, tensor_line(a, canonical_class(curve)))) {
      check.fail("Serre identity fails on " + describe(a) + ", " + describe(b));
    }
    if (serre_dual(serre_dual(a)) != a) {
      check.fail("involution fails on " + describe(a));
    }
  }
  return check;
}

// 5. Riemann-Roch identity on randomized pairs.
Check criterion_riemann_roch() {
  Check check;
  Rng rng(15);
  for (int trial = 0; trial < 1000; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto a = random_invariant(rng, curve, 5, 10);
    auto b = random_invariant(rng, curve, 5, 10);
    if (euler_pair(a, b) - degree_wrt(a, b) -
            b.rank() * euler_pair(a, structure_class(curve)) !=
        0) {
      check.fail("identity fails on " + describe(a) + ", " + describe(b));
    }
  }
  return check;
}

// 6. Skyscraper identities on randomized invariants.
Check criterion_skyscraper() {
  Check check;
  Rng rng(16);
  for (int trial = 0; trial < 1000; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto delta = skyscraper_class(curve);
    auto g = random_invariant(rng, curve, 5, 10);
    check.expect(euler_pair(delta, g) == -g.rank(),
                 "<delta,g> != -rank on " + describe(g));
    check.expect(euler_pair(g, delta) == g.rank(),
                 "<g,delta> != rank on " + describe(g));
  }
  return check;
}

// 7. Orthogonalization on >= 200 pairs, 50 probes each, plus the worked case.
Check criterion_orthogonalize() {
  Check check;
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto a = random_generating(rng, curve);
    auto b = random_positive(rng, curve, 1, 5);
    auto prime = orthogonalize(a, b);
    check.expect(euler_pair(prime, b) == 0, "not orthogonal: " + describe(prime));
    check.expect(is_generating(prime), "not generating: " + describe(prime));
    for (int probe = 0; probe < 50; ++probe) {
      auto g = random_positive(rng, curve, 1, 5);
      if (slope_compare(prime, b, g) != slope_compare(a, b, g)) {
        check.fail("slope comparison changed at " + describe(g));
      }
    }
  }
  auto curve = football();
  auto alpha = inv(curve, 3, 0, {{2, 1}, {1, 1, 1}});
  auto beta = inv(curve, 2, 0, {{1, 1}, {1, 1, 0}});
  check.expect(orthogonalize(alpha, beta) ==
                   inv(curve, 18, 6, {{12, 6}, {6, 6, 6}}),
               "worked instance does not equal (18,6,(12,6),(6,6,6))");
  return check;
}

// 8. Effective bounds on the two fixed instances.
Check criterion_effective_bounds() {
  Check check;
  {
    auto curve = genus2_one_point();
    auto report = effective_bounds(curve, inv(curve, 2, 0, {{1, 1}}));
    check.expect(report.kappa == Rational(5), "kappa != 5");
    check.expect(report.basepoint_free_min_m == 6, "basepoint_free_min_m != 6");
    check.expect(report.finite_map_min_m == 25, "finite_map_min_m != 25");
  }
  {
    auto curve = football();
    auto report =
        effective_bounds(curve, inv(curve, 2, 0, {{1, 1}, {1, 1, 0}}));
    check.expect(report.kappa == Rational(0), "kappa != 0");
    check.expect(report.basepoint_free_min_m == 1, "basepoint_free_min_m != 1");
  }
  return check;
}

// 9. HN oracle: subset brute force on >= 200 line sums, < 10 s.
Check criterion_hn_oracle() {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto a = random_positive(rng, curve, 1, 5);
    auto bundle = random_line_sum(rng, curve, 6);
    if (mu_max_sum(a, bundle) != max_subset_slope(a, bundle)) {
      check.fail("subset oracle disagrees with mu_max_sum");
    }
    auto hn = hn_type(a, bundle);
    std::size_t summands = 0;
    std::vector<std::pair<Int, NumericalInvariant>> terms;
    for (std::size_t i = 0; i < hn.blocks.size(); ++i) {
      if (i > 0 && !(hn.blocks[i].slope < hn.blocks[i - 1].slope)) {
        check.fail("block slopes not strictly decreasing");
      }
      summands += hn.blocks[i].summands.size();
      terms.emplace_back(1, hn.blocks[i].invariant);
    }
    if (summands != bundle.summands().size() ||
        combine(terms) != bundle.total()) {
      check.fail("blocks do not partition the summands");
    }
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 10.0,
               "runtime " + std::to_string(elapsed) + "s exceeds 10s");
  return check;
}

// 10. Enumeration oracle and closed-form bound domination.
Check criterion_enumeration() {
  Check check;
  Rng rng(20);
  for (int instance = 0; instance < 150; ++instance) {
    auto curve = random_curve(rng, 2, 3, 3);
    auto b = random_positive(rng, curve, 2, 3, 5);
    auto a = orthogonalize(random_generating(rng, curve), b);
    SubinvariantFilter filter;
    filter.ell = uniform(rng, 0, 2);
    if (uniform(rng, 0, 1) == 1) {
      const int lo = uniform(rng, -4, 0);
      filter.degree_floor = lo;
      filter.degree_ceiling = lo + uniform(rng, 0, 4);
    }
    auto expected = box_oracle(b, a, filter);
    if (enumerate_subinvariants(b, a, filter) != expected ||
        enumerate_subinvariants_serial(b, a, filter) != expected) {
      check.fail("enumeration differs from the box oracle");
      continue;
    }
    const auto bounds = effective_bounds(curve, b);
    const Int hom0 = hom_vanishing_bound(a, b, zero_class(curve), filter);
    check.expect(hom0 <= bounds.basepoint_free_min_m,
                 "eta=0 bound " + hom0.str() + " exceeds basepoint_free_min_m " +
                     bounds.basepoint_free_min_m.str() + " on " + describe(b));
    auto minus_delta = combine({{-1, skyscraper_class(curve)}});
    const Int hom_minus = hom_vanishing_bound(a, b, minus_delta, filter);
    Int plus_cap = smallest_int_greater(bounds.kappa_plus);
    if (plus_cap < 1) {
      plus_cap = 1;
    }
    check.expect(hom_minus <= plus_cap,
                 "eta=-delta bound " + hom_minus.str() + " exceeds " +
                     plus_cap.str() + " on " + describe(b) + " with alpha " +
                     describe(a));
  }
  return check;
}

// 11. Planted-wall recovery, point and segment variants.
Check criterion_walls() {
  Check check;
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto curve = random_curve(rng, 3, 3, 5);
    auto gamma0 = structure_class(curve);
    auto beta = combine({{2, gamma0}});
    auto alpha = random_positive(rng, curve, 1, 5);
    auto report = is_on_wall(alpha, beta);
    const bool found =
        report.on_wall &&
        std::find(report.witnesses.begin(), report.witnesses.end(), gamma0) !=
            report.witnesses.end();
    check.expect(found, "doubled class not detected under " + describe(alpha));
  }
  int planted = 0;
  for (int trial = 0; trial < 500 && planted < 25; ++trial) {
    auto curve = random_curve(rng, 2, 2, 4);
    auto beta = random_positive(rng, curve, 2, 4, 4);
    auto a0 = random_positive(rng, curve, 1, 5, 6);
    auto a1 = random_positive(rng, curve, 1, 5, 6);
    if (a0 == a1) {
      continue;
    }
    SubinvariantFilter window;
    window.degree_floor = -3;
    window.degree_ceiling = 3;
    const NumericalInvariant* witness = nullptr;
    Rational expected_t;
    auto candidates = enumerate_subinvariants(beta, a0, window);
    for (const auto& g : candidates) {
      const Int f0 =
          beta.rank() * degree_wrt(a0, g) - g.rank() * degree_wrt(a0, beta);
      const Int f1 =
          beta.rank() * degree_wrt(a1, g) - g.rank() * degree_wrt(a1, beta);
      if (f0 > 0 && f1 < 0) {
        expected_t = make_ratio(f0, f0 - f1);
        witness = &g;
        break;
      }
    }
    if (witness == nullptr) {
      continue;
    }
    ++planted;
    bool recovered = false;
    for (const auto& wall : walls_on_segment(a0, a1, beta, {-3, 3})) {
      if (wall.t_begin == expected_t && wall.t_end == expected_t) {
        const auto& ws = wall.report.witnesses;
        recovered = std::find(ws.begin(), ws.end(), *witness) != ws.end();
      }
    }
    check.expect(recovered, "planted wall at t=" + render_rational(expected_t) +
                                " not recovered");
  }
  check.expect(planted == 25, "only planted " + std::to_string(planted) +
                                  " of 25 segment instances");
  return check;
}

// 12. CLI golden outputs, byte-identical, plus the failure exit codes.
Check criterion_cli() {
  Check check;
  const std::string bin = STACKYKT_BIN;
  const std::string dir = GOLDEN_DIR;
  auto input = [&dir](const std::string& name) {
    return dir + "/inputs/" + name;
  };
  auto expect_golden = [&](const std::string& args, const std::string& name) {
    auto run = run_cli_at(bin, args);
    if (run.exit_code != 0) {
      check.fail(args + " exited with " + std::to_string(run.exit_code));
    } else if (run.output != read_file(dir + "/expected/" + name)) {
      check.fail(args + " differs from golden " + name);
    }
  };
  const std::string football = input("football.json");
  const std::string g2e2 = input("g2e2.json");
  expect_golden("genus --curve " + football, "genus_football.txt");
  expect_golden("genus --curve " + football + " --json", "genus_football.json");
  const std::string pair_flags =
      " --alpha " + input("alpha.json") + " --beta " + input("beta.json");
  expect_golden("pair --curve " + football + pair_flags, "pair_alpha_beta.txt");
  expect_golden("pair --curve " + football + pair_flags + " --json",
                "pair_alpha_beta.json");
  const std::string bounds_flags = " --beta " + input("rank2.json");
  expect_golden("bounds --curve " + g2e2 + bounds_flags, "bounds_g2e2.txt");
  expect_golden("bounds --curve " + g2e2 + bounds_flags + " --json",
                "bounds_g2e2.json");
  const std::string hn_flags =
      " --alpha " + input("alpha.json") + " --lines " + input("lines.json");
  expect_golden("hn --curve " + football + hn_flags, "hn_lines.txt");
  expect_golden("hn --curve " + football + hn_flags + " --json",
                "hn_lines.json");

  auto bad = run_cli_at(bin, "genus --curve " + input("bad_curve.json"), true);
  check.expect(bad.exit_code == 2, "invalid curve should exit 2");
  check.expect(bad.output.find("duplicate label p") != std::string::npos,
               "violation list not reported");
  auto domain = run_cli_at(bin,
                           "slope --curve " + football + " --alpha " +
                               input("alpha.json") + " --gamma " +
                               input("delta.json"),
                           true);
  check.expect(domain.exit_code == 3, "rank-0 slope should exit 3");
  return check;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"dual-route pairing equivalence", criterion_dual_route},
      {"diagonal Euler formula", criterion_diagonal},
      {"pairing bounds and attainment", criterion_pairing_bounds},
      {"Serre-duality identity", criterion_serre},
      {"Riemann-Roch identity", criterion_riemann_roch},
      {"skyscraper identities", criterion_skyscraper},
      {"orthogonalization", criterion_orthogonalize},
      {"effective bounds", criterion_effective_bounds},
      {"HN oracle", criterion_hn_oracle},
      {"enumeration oracle and bound domination", criterion_enumeration},
      {"planted-wall recovery", criterion_walls},
      {"CLI golden outputs and exit codes", criterion_cli},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    if (result.ok) {
      std::cout << "[PASS] criterion " << i + 1 << ": " << criteria[i].first
                << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] criterion " << i + 1 << ": " << criteria[i].first
                << " -- " << result.detail << "\n";
    }
  }
  return failures;
}
