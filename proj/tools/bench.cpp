// Benchmark comparing the serial reference kernels to the OpenMP versions
// on large product monoids. Build target: monoid-bench.

#include <chrono>
#include <cstdio>
#include <string>

#include "monoidkit/congruence.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/kernels.hpp"
#include "monoidkit/monoid.hpp"

using namespace monoidkit;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn>
double time_best_of(int reps, Fn fn) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

void bench_monoid(const std::string& name, const FiniteMonoid& m, int reps) {
  const std::uint32_t n = m.size;
  std::printf("%-18s order %5u\n", name.c_str(), n);

  double s = time_best_of(reps, [&] {
    if (kernels::associativity_violation_serial(m.table.data(), n)) std::abort();
  });
  double p = time_best_of(reps, [&] {
    if (kernels::associativity_violation(m.table.data(), n)) std::abort();
  });
  std::printf("  associativity   serial %9.3fms   parallel %9.3fms   speedup %.2fx\n", s * 1e3, p * 1e3, s / p);

  s = time_best_of(reps, [&] { kernels::regularity_witnesses_serial(m.table.data(), n); });
  p = time_best_of(reps, [&] { kernels::regularity_witnesses(m.table.data(), n); });
  std::printf("  regularity      serial %9.3fms   parallel %9.3fms   speedup %.2fx\n", s * 1e3, p * 1e3, s / p);

  Partition pi = Partition::universal(n);
  std::vector<element> mults(n);
  for (element x = 0; x < n; ++x) mults[x] = x;
  std::vector<std::uint32_t> sig(std::size_t(n) * n);
  s = time_best_of(reps, [&] {
    kernels::right_signatures_serial(m.table.data(), n, pi.cls.data(), mults.data(), n, sig.data());
  });
  p = time_best_of(reps, [&] {
    kernels::right_signatures(m.table.data(), n, pi.cls.data(), mults.data(), n, sig.data());
  });
  std::printf("  signatures      serial %9.3fms   parallel %9.3fms   speedup %.2fx\n", s * 1e3, p * 1e3, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("OpenMP: %s (%d threads)\n", kernels::parallel_enabled() ? "on" : "off",
              kernels::thread_count());

  set_element_cap(1u << 20);
  auto t3 = full_transformations(3);
  bench_monoid("T3 x C4", direct_product(t3, cyclic_group(4)), reps);
  bench_monoid("T3 x T3", direct_product(t3, t3), reps);
  return 0;
}
