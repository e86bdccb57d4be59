#include "monoidkit/partition.hpp"

#include "monoidkit/errors.hpp"

namespace monoidkit {

const char* side_name(Side side) {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
  }
  return "?";
}

Partition Partition::identity(std::uint32_t n) {
  Partition p;
  p.cls.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) p.cls[i] = i;
  p.count = n;
  return p;
}

Partition Partition::universal(std::uint32_t n) {
  Partition p;
  p.cls.assign(n, 0);
  p.count = n == 0 ? 0 : 1;
  return p;
}

Partition Partition::from_labels(const std::vector<std::uint32_t>& labels) {
  Partition p;
  p.cls = labels;
  p.count = 0;
  for (auto c : labels) p.count = std::max(p.count, c + 1);
  p.canonicalize();
  return p;
}

Partition Partition::from_classes(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& classes) {
  Partition p;
  p.cls.assign(n, n);
  std::uint32_t next = 0;
  for (const auto& c : classes) {
    for (auto x : c) {
      if (x >= n) raise(errc::index_out_of_range, "partition class member " + std::to_string(x));
      if (p.cls[x] != n) raise(errc::invalid_parameter, "element in two partition classes");
      p.cls[x] = next;
    }
    ++next;
  }
  for (std::uint32_t x = 0; x < n; ++x)
    if (p.cls[x] == n) raise(errc::invalid_parameter, "element " + std::to_string(x) + " not covered by partition");
  p.count = next;
  p.canonicalize();
  return p;
}

void Partition::canonicalize() {
  const std::uint32_t n = size();
  std::vector<std::uint32_t> renumber(count, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (renumber[cls[x]] == UINT32_MAX) renumber[cls[x]] = next++;
    cls[x] = renumber[cls[x]];
  }
  count = next;
}

std::vector<std::vector<std::uint32_t>> Partition::classes() const {
  std::vector<std::vector<std::uint32_t>> out(count);
  for (std::uint32_t x = 0; x < size(); ++x) out[cls[x]].push_back(x);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  std::vector<std::uint32_t> image(count, UINT32_MAX);
  for (std::uint32_t x = 0; x < size(); ++x) {
    std::uint32_t& img = image[cls[x]];
    if (img == UINT32_MAX) img = coarser.cls[x];
    else if (img != coarser.cls[x]) return false;
  }
  return true;
}

}  // namespace monoidkit
