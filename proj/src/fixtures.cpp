#include "monoidkit/fixtures.hpp"

#include <algorithm>
#include <vector>

namespace monoidkit {

FiniteMonoid trivial_monoid() {
  FiniteMonoid m;
  m.size = 1;
  m.table = {0};
  m.identity = 0;
  m.names = {"1"};
  return build_monoid(std::move(m));
}

FiniteMonoid cyclic_group(std::uint32_t n) {
  if (n == 0) raise(errc::invalid_parameter, "cyclic group of order 0");
  FiniteMonoid m;
  m.size = n;
  m.table.resize(std::size_t(n) * n);
  for (element a = 0; a < n; ++a)
    for (element b = 0; b < n; ++b) m.table[std::size_t(a) * n + b] = (a + b) % n;
  m.identity = 0;
  if (n > 1) m.generators = {1};
  m.names.push_back("e");
  for (element a = 1; a < n; ++a) m.names.push_back(a == 1 ? "a" : "a" + std::to_string(a));
  return build_monoid(std::move(m));
}

FiniteMonoid klein_group() {
  // elements as bit vectors over F2^2
  FiniteMonoid m;
  m.size = 4;
  m.table.resize(16);
  for (element a = 0; a < 4; ++a)
    for (element b = 0; b < 4; ++b) m.table[a * 4 + b] = a ^ b;
  m.identity = 0;
  m.generators = {1, 2};
  m.names = {"e", "a", "b", "ab"};
  return build_monoid(std::move(m));
}

namespace {

std::vector<std::vector<std::uint32_t>> all_maps(std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> maps;
  std::vector<std::uint32_t> f(k, 0);
  for (;;) {
    maps.push_back(f);
    std::uint32_t i = k;
    while (i > 0 && f[i - 1] == k - 1) f[--i] = 0;
    if (i == 0) break;
    f[i - 1]++;
  }
  std::sort(maps.begin(), maps.end());
  return maps;
}

FiniteMonoid transformation_monoid(const std::vector<std::vector<std::uint32_t>>& maps,
                                   std::uint32_t k, ElementSet gens,
                                   std::vector<std::string> names) {
  FiniteMonoid m;
  m.size = static_cast<std::uint32_t>(maps.size());
  m.table.resize(std::size_t(m.size) * m.size);
  for (element a = 0; a < m.size; ++a)
    for (element b = 0; b < m.size; ++b) {
      std::vector<std::uint32_t> c(k);
      for (std::uint32_t p = 0; p < k; ++p) c[p] = maps[b][maps[a][p]];  // left-to-right
      auto it = std::lower_bound(maps.begin(), maps.end(), c);
      m.table[std::size_t(a) * m.size + b] = static_cast<element>(it - maps.begin());
    }
  for (element a = 0; a < m.size; ++a) {
    bool ident = true;
    for (std::uint32_t p = 0; p < k; ++p) ident = ident && maps[a][p] == p;
    if (ident) m.identity = a;
  }
  m.generators = std::move(gens);
  m.names = std::move(names);
  return build_monoid(std::move(m));
}

}  // namespace

FiniteMonoid full_transformations(std::uint32_t k) {
  if (k < 1 || k > 4) raise(errc::invalid_parameter, "full_transformations supports 1..4 points");
  auto maps = all_maps(k);
  std::vector<std::string> names;
  for (auto& f : maps) {
    std::string s;
    for (auto v : f) s += static_cast<char>('0' + v);
    names.push_back(s);
  }
  ElementSet gens;
  if (k == 1) {
    gens = {};
  } else {
    auto find = [&](const std::vector<std::uint32_t>& f) {
      return static_cast<element>(std::lower_bound(maps.begin(), maps.end(), f) - maps.begin());
    };
    std::vector<std::uint32_t> cycle(k), swap01(k), merge(k);
    for (std::uint32_t p = 0; p < k; ++p) cycle[p] = (p + 1) % k, swap01[p] = p, merge[p] = p;
    swap01[0] = 1;
    swap01[1] = 0;
    merge[1] = 0;
    gens = normalized_set({find(cycle), find(swap01), find(merge)});
  }
  return transformation_monoid(maps, k, gens, names);
}

FiniteMonoid t2() {
  // {id, sw, c1, c2} with left-to-right composition
  FiniteMonoid m;
  m.size = 4;
  m.table = {
      0, 1, 2, 3,  // id
      1, 0, 2, 3,  // sw
      2, 3, 2, 3,  // c1
      3, 2, 2, 3,  // c2
  };
  m.identity = 0;
  m.generators = {1, 2};
  m.names = {"id", "sw", "c1", "c2"};
  return build_monoid(std::move(m));
}

FiniteMonoid sym3() {
  // permutations of {0,1,2}, composition left to right
  std::vector<std::vector<std::uint32_t>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  FiniteMonoid m;
  m.size = 6;
  m.table.resize(36);
  for (element a = 0; a < 6; ++a)
    for (element b = 0; b < 6; ++b) {
      std::vector<std::uint32_t> c(3);
      for (std::uint32_t p = 0; p < 3; ++p) c[p] = perms[b][perms[a][p]];
      auto it = std::find(perms.begin(), perms.end(), c);
      m.table[a * 6 + b] = static_cast<element>(it - perms.begin());
    }
  m.identity = 0;
  m.generators = {2, 3};  // (01) and the 3-cycle
  m.names = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
  return build_monoid(std::move(m));
}

FiniteMonoid group_by_name(const std::string& name) {
  if (name == "trivial") return trivial_monoid();
  if (name == "klein") return klein_group();
  if (name == "s3") return sym3();
  if (name.size() == 2 && name[0] == 'c' && name[1] >= '2' && name[1] <= '9')
    return cyclic_group(static_cast<std::uint32_t>(name[1] - '0'));
  raise(errc::invalid_parameter, "unknown group name '" + name + "'");
}

}  // namespace monoidkit
