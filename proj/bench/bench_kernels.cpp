// Times the enumeration kernels against their serial reference
// implementations on a larger-than-test instance and cross-checks that both
// produce identical output.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

#include "stacky/stability.hpp"
#include "stacky/walls.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace stacky;

namespace {

int threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Fn>
double time_once(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-22s %10.3fs %10.3fs %8.2fx   %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0,
              equal ? "outputs equal" : "OUTPUTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
  // One knob: the total rank (default 9).
  const int rank = argc > 1 ? std::atoi(argv[1]) : 12;
  if (rank < 8) {
    std::fprintf(stderr, "rank must be at least 8\n");
    return 1;
  }

  auto curve = validate_curve(1, {{"p", 4}, {"q", 5}}).curve;
  NumericalInvariant beta(curve, rank, 3,
                          {{Int(rank - 6), Int(2), Int(2), Int(2)},
                           {Int(rank - 7), Int(2), Int(2), Int(2), Int(1)}});
  NumericalInvariant alpha(curve, rank, 1,
                           {{Int(rank - 3), Int(1), Int(1), Int(1)},
                            {Int(rank - 4), Int(1), Int(1), Int(1), Int(1)}});
  NumericalInvariant alpha1(curve, rank, 5,
                            {{Int(rank - 3), Int(1), Int(1), Int(1)},
                             {Int(rank - 4), Int(1), Int(1), Int(1), Int(1)}});

  SubinvariantFilter filter;
  filter.ell = 2;

  std::printf("total rank %d, %d thread(s)\n\n", rank, threads());
  std::printf("%-22s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    std::vector<NumericalInvariant> serial_out, parallel_out;
    const double s = time_once(
        [&] { serial_out = enumerate_subinvariants_serial(beta, alpha, filter); });
    const double p = time_once(
        [&] { parallel_out = enumerate_subinvariants(beta, alpha, filter); });
    report("enumerate", s, p, serial_out == parallel_out);
    std::printf("%-22s %zu candidates\n", "", parallel_out.size());
  }
  {
    WallReport serial_out, parallel_out;
    const double s =
        time_once([&] { serial_out = is_on_wall_serial(alpha, beta); });
    const double p = time_once([&] { parallel_out = is_on_wall(alpha, beta); });
    report("is_on_wall", s, p, serial_out.witnesses == parallel_out.witnesses);
  }
  {
    std::vector<SegmentWall> serial_out, parallel_out;
    const std::pair<Int, Int> window{-4, 4};
    const double s = time_once([&] {
      serial_out = walls_on_segment_serial(alpha, alpha1, beta, window);
    });
    const double p = time_once(
        [&] { parallel_out = walls_on_segment(alpha, alpha1, beta, window); });
    bool equal = serial_out.size() == parallel_out.size();
    for (std::size_t i = 0; equal && i < serial_out.size(); ++i) {
      equal = serial_out[i].t_begin == parallel_out[i].t_begin &&
              serial_out[i].t_end == parallel_out[i].t_end &&
              serial_out[i].report.witnesses == parallel_out[i].report.witnesses;
    }
    report("walls_on_segment", s, p, equal);
  }
  {
    auto ortho = orthogonalize(alpha, beta);
    auto eta = zero_class(curve);
    Int serial_out, parallel_out;
    const double s = time_once(
        [&] { serial_out = hom_vanishing_bound_serial(ortho, beta, eta, filter); });
    const double p = time_once(
        [&] { parallel_out = hom_vanishing_bound(ortho, beta, eta, filter); });
    report("hom_vanishing_bound", s, p, serial_out == parallel_out);
  }
  return 0;
}
