#include "monoidkit/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monoidkit::kernels {

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::optional<Triple> associativity_violation_serial(const element* t, std::uint32_t n) {
  const std::size_t nn = n;
  for (element x = 0; x < n; ++x) {
    const element* rx = t + nn * x;
    for (element y = 0; y < n; ++y) {
      const element* rxy = t + nn * rx[y];
      const element* ry = t + nn * y;
      for (element z = 0; z < n; ++z) {
        if (rxy[z] != rx[ry[z]]) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> associativity_violation(const element* t, std::uint32_t n) {
#ifdef _OPENMP
  if (std::uint64_t(n) * n * n >= (1u << 21)) {
    const std::size_t nn = n;
    // Track the smallest violating x per thread; rescan that row serially so
    // the reported triple is independent of the schedule.
    element best_x = n;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best_x)
    for (element x = 0; x < n; ++x) {
      if (x >= best_x) continue;
      const element* rx = t + nn * x;
      bool bad = false;
      for (element y = 0; y < n && !bad; ++y) {
        const element* rxy = t + nn * rx[y];
        const element* ry = t + nn * y;
        for (element z = 0; z < n; ++z) {
          if (rxy[z] != rx[ry[z]]) {
            bad = true;
            break;
          }
        }
      }
      if (bad && x < best_x) best_x = x;
    }
    if (best_x == n) return std::nullopt;
    const element* rx = t + nn * best_x;
    for (element y = 0; y < n; ++y) {
      const element* rxy = t + nn * rx[y];
      const element* ry = t + nn * y;
      for (element z = 0; z < n; ++z) {
        if (rxy[z] != rx[ry[z]]) return Triple{best_x, y, z};
      }
    }
  }
#endif
  return associativity_violation_serial(t, n);
}

std::vector<std::optional<element>> regularity_witnesses_serial(const element* t, std::uint32_t n) {
  const std::size_t nn = n;
  std::vector<std::optional<element>> out(n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (t[nn * t[nn * x + y] + x] == x) {
        out[x] = y;
        break;
      }
    }
  }
  return out;
}

std::vector<std::optional<element>> regularity_witnesses(const element* t, std::uint32_t n) {
  const std::size_t nn = n;
  std::vector<std::optional<element>> out(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (std::uint64_t(n) * n >= (1u << 16))
#endif
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (t[nn * t[nn * x + y] + x] == x) {
        out[x] = y;
        break;
      }
    }
  }
  return out;
}

void right_signatures_serial(const element* t, std::uint32_t n, const std::uint32_t* cls,
                             const element* mults, std::uint32_t mult_count, std::uint32_t* out) {
  const std::size_t nn = n;
  for (element x = 0; x < n; ++x) {
    const element* row = t + nn * x;
    std::uint32_t* o = out + std::size_t(x) * mult_count;
    for (std::uint32_t k = 0; k < mult_count; ++k) o[k] = cls[row[mults[k]]];
  }
}

void right_signatures(const element* t, std::uint32_t n, const std::uint32_t* cls,
                      const element* mults, std::uint32_t mult_count, std::uint32_t* out) {
  const std::size_t nn = n;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (std::uint64_t(n) * mult_count >= (1u << 18))
#endif
  for (element x = 0; x < n; ++x) {
    const element* row = t + nn * x;
    std::uint32_t* o = out + std::size_t(x) * mult_count;
    for (std::uint32_t k = 0; k < mult_count; ++k) o[k] = cls[row[mults[k]]];
  }
}

}  // namespace monoidkit::kernels
