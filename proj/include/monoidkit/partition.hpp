#pragma once

#include <cstdint>
#include <vector>

namespace monoidkit {

enum class Side { left, right, two_sided };

const char* side_name(Side side);

// Equivalence relation on 0..n-1 stored as dense class indices. All
// operations return partitions in canonical form: classes numbered by their
// minimal element, so equal partitions compare equal.
struct Partition {
  std::vector<std::uint32_t> cls;
  std::uint32_t count = 0;

  std::uint32_t size() const { return static_cast<std::uint32_t>(cls.size()); }
  bool same(std::uint32_t a, std::uint32_t b) const { return cls[a] == cls[b]; }

  static Partition identity(std::uint32_t n);   // Delta
  static Partition universal(std::uint32_t n);  // Phi
  static Partition from_classes(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& classes);
  static Partition from_labels(const std::vector<std::uint32_t>& labels);

  void canonicalize();
  std::vector<std::vector<std::uint32_t>> classes() const;
  // true when every class of this partition lies inside one class of coarser
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition&) const = default;
};

struct Congruence {
  Partition partition;
  Side side = Side::two_sided;
  bool verified = false;

  std::uint32_t index() const { return partition.count; }
};

}  // namespace monoidkit
