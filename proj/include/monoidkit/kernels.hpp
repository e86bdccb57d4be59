#pragma once

// Data-parallel scans over dense multiplication tables. Each kernel has a
// plain serial reference next to the OpenMP version; tests cross-check the
// two and tools/bench.cpp compares their throughput.

#include <cstdint>
#include <optional>
#include <vector>

namespace monoidkit::kernels {

using element = std::uint32_t;

struct Triple {
  element x, y, z;
};

// First (lexicographically smallest) triple with (xy)z != x(yz), if any.
std::optional<Triple> associativity_violation(const element* table, std::uint32_t n);
std::optional<Triple> associativity_violation_serial(const element* table, std::uint32_t n);

// Per element x, the smallest y with xyx = x (no value when none exists).
std::vector<std::optional<element>> regularity_witnesses(const element* table, std::uint32_t n);
std::vector<std::optional<element>> regularity_witnesses_serial(const element* table, std::uint32_t n);

// Fills out[x * mult_count + k] = cls[table[x * n + mults[k]]]; the rows are
// the definitional right-multiplication signatures used by the Sigma oracle.
void right_signatures(const element* table, std::uint32_t n, const std::uint32_t* cls,
                      const element* mults, std::uint32_t mult_count, std::uint32_t* out);
void right_signatures_serial(const element* table, std::uint32_t n, const std::uint32_t* cls,
                             const element* mults, std::uint32_t mult_count, std::uint32_t* out);

bool parallel_enabled();
int thread_count();

}  // namespace monoidkit::kernels
