#include "monoidkit/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>

#include "monoidkit/kernels.hpp"

namespace monoidkit {

namespace {
std::atomic<std::uint64_t> g_element_cap{100000};
}

std::uint64_t element_cap() { return g_element_cap.load(); }
void set_element_cap(std::uint64_t cap) { g_element_cap.store(cap); }

ElementSet normalized_set(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool set_contains(const ElementSet& s, element x) {
  return std::binary_search(s.begin(), s.end(), x);
}

std::optional<element> SemigroupTable::find_identity() const {
  for (element e = 0; e < size; ++e) {
    bool ok = true;
    for (element x = 0; x < size && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::string FiniteMonoid::name_of(element x) const {
  if (x < names.size() && !names[x].empty()) return names[x];
  return std::to_string(x);
}

element FiniteMonoid::power(element x, std::uint64_t k) const {
  element acc = identity;
  for (std::uint64_t i = 0; i < k; ++i) acc = at(acc, x);
  return acc;
}

bool FiniteMonoid::is_group() const {
  for (element x = 0; x < size; ++x) {
    bool inv = false;
    for (element y = 0; y < size && !inv; ++y)
      inv = at(x, y) == identity && at(y, x) == identity;
    if (!inv) return false;
  }
  return true;
}

void FiniteMonoid::check_element(element x) const {
  if (x >= size) raise(errc::index_out_of_range, "element " + std::to_string(x) + " in monoid of order " + std::to_string(size));
}

FiniteMonoid build_monoid(FiniteMonoid spec) {
  const std::uint32_t n = spec.size;
  if (n == 0) raise(errc::invalid_parameter, "empty monoid");
  if (n > element_cap()) raise(errc::size_overflow, "order " + std::to_string(n) + " exceeds cap " + std::to_string(element_cap()));
  if (spec.table.size() != std::size_t(n) * n) raise(errc::invalid_parameter, "table size mismatch");
  for (auto v : spec.table)
    if (v >= n) raise(errc::index_out_of_range, "table entry " + std::to_string(v));
  if (spec.identity >= n) raise(errc::index_out_of_range, "identity index");
  if (!spec.names.empty() && spec.names.size() != n) raise(errc::invalid_parameter, "names count mismatch");

  for (element x = 0; x < n; ++x) {
    if (spec.at(spec.identity, x) != x || spec.at(x, spec.identity) != x)
      raise(errc::identity_violation, "element " + std::to_string(x) + " under identity " + std::to_string(spec.identity));
  }

  if (auto bad = kernels::associativity_violation(spec.table.data(), n)) {
    raise(errc::associativity_violation, "(" + std::to_string(bad->x) + "," + std::to_string(bad->y) + "," + std::to_string(bad->z) + ")");
  }

  spec.generators = normalized_set(std::move(spec.generators));
  for (auto g : spec.generators)
    if (g >= n) raise(errc::index_out_of_range, "generator " + std::to_string(g));

  // breadth-first closure from the generators; identity is the empty product
  std::vector<char> seen(n, 0);
  std::deque<element> queue;
  seen[spec.identity] = 1;
  queue.push_back(spec.identity);
  for (auto g : spec.generators) {
    if (!seen[g]) {
      seen[g] = 1;
      queue.push_back(g);
    }
  }
  while (!queue.empty()) {
    element x = queue.front();
    queue.pop_front();
    for (auto g : spec.generators) {
      element y = spec.at(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  for (element x = 0; x < n; ++x)
    if (!seen[x]) raise(errc::generators_not_generating, "element " + std::to_string(x) + " unreachable");

  if (spec.zero) {
    element z = *spec.zero;
    if (z >= n) raise(errc::index_out_of_range, "zero index");
    for (element x = 0; x < n; ++x)
      if (spec.at(z, x) != z || spec.at(x, z) != z)
        raise(errc::invalid_parameter, "declared zero is not absorbing at " + std::to_string(x));
  } else {
    for (element z = 0; z < n; ++z) {
      bool ok = true;
      for (element x = 0; x < n && ok; ++x) ok = spec.at(z, x) == z && spec.at(x, z) == z;
      if (ok) {
        spec.zero = z;
        break;
      }
    }
  }
  return spec;
}

FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n) {
  const std::uint64_t sz = std::uint64_t(m.size) * n.size;
  if (sz > element_cap()) raise(errc::size_overflow, "product order " + std::to_string(sz));
  FiniteMonoid p;
  p.size = static_cast<std::uint32_t>(sz);
  p.table.resize(sz * sz);
  auto idx = [&](element a, element b) { return a * n.size + b; };
  for (element a = 0; a < m.size; ++a)
    for (element b = 0; b < n.size; ++b)
      for (element c = 0; c < m.size; ++c)
        for (element d = 0; d < n.size; ++d)
          p.table[std::size_t(idx(a, b)) * p.size + idx(c, d)] = idx(m.at(a, c), n.at(b, d));
  p.identity = idx(m.identity, n.identity);
  for (auto g : m.generators) p.generators.push_back(idx(g, n.identity));
  for (auto h : n.generators) p.generators.push_back(idx(m.identity, h));
  if (!m.names.empty() || !n.names.empty()) {
    p.names.resize(p.size);
    for (element a = 0; a < m.size; ++a)
      for (element b = 0; b < n.size; ++b)
        p.names[idx(a, b)] = "(" + m.name_of(a) + "," + n.name_of(b) + ")";
  }
  return build_monoid(std::move(p));
}

namespace {

FiniteMonoid adjoin_impl(std::uint32_t n, const std::vector<element>& table, Adjoin kind,
                         std::optional<element> old_identity, const std::vector<std::string>& names,
                         const ElementSet& old_generators) {
  if (std::uint64_t(n) + 1 > element_cap()) raise(errc::size_overflow, "adjoin exceeds cap");
  FiniteMonoid out;
  out.size = n + 1;
  const element fresh = n;
  out.table.resize(std::size_t(out.size) * out.size);
  for (element x = 0; x < n; ++x)
    for (element y = 0; y < n; ++y) out.table[std::size_t(x) * out.size + y] = table[std::size_t(x) * n + y];
  for (element x = 0; x <= n; ++x) {
    element via = kind == Adjoin::identity ? x : fresh;
    out.table[std::size_t(fresh) * out.size + x] = via;
    out.table[std::size_t(x) * out.size + fresh] = via;
  }
  if (kind == Adjoin::identity) {
    out.identity = fresh;
    // the old identity is no longer the empty product, so it must generate
    if (old_identity) out.generators = old_generators, out.generators.push_back(*old_identity);
    else for (element x = 0; x < n; ++x) out.generators.push_back(x);
  } else {
    if (!old_identity) raise(errc::invalid_parameter, "adjoin zero needs a monoid");
    out.identity = *old_identity;
    out.generators = old_generators;
    out.generators.push_back(fresh);
    out.zero = fresh;
  }
  if (!names.empty()) {
    out.names = names;
    out.names.push_back(kind == Adjoin::identity ? "1!" : "0!");
  }
  return build_monoid(std::move(out));
}

}  // namespace

FiniteMonoid adjoin(const FiniteMonoid& m, Adjoin kind) {
  return adjoin_impl(m.size, m.table, kind, m.identity, m.names, m.generators);
}

FiniteMonoid adjoin_identity(const SemigroupTable& s) {
  if (auto bad = kernels::associativity_violation(s.table.data(), s.size))
    raise(errc::associativity_violation, "semigroup table");
  return adjoin_impl(s.size, s.table, Adjoin::identity, std::nullopt, s.names, {});
}

Homomorphism check_homomorphism(const FiniteMonoid& m, const FiniteMonoid& n,
                                std::vector<element> map) {
  if (map.size() != m.size) raise(errc::invalid_parameter, "map not total");
  for (auto v : map)
    if (v >= n.size) raise(errc::index_out_of_range, "map value " + std::to_string(v));
  if (map[m.identity] != n.identity) raise(errc::identity_not_preserved, "identity maps to " + std::to_string(map[m.identity]));
  for (element x = 0; x < m.size; ++x)
    for (element y = 0; y < m.size; ++y)
      if (map[m.at(x, y)] != n.at(map[x], map[y]))
        raise(errc::not_homomorphism, "pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
  return Homomorphism{m, n, std::move(map)};
}

Homomorphism identity_homomorphism(const FiniteMonoid& m) {
  std::vector<element> map(m.size);
  std::iota(map.begin(), map.end(), 0u);
  return Homomorphism{m, m, std::move(map)};
}

std::optional<std::pair<element, element>> ideal_violation(const FiniteMonoid& m, const ElementSet& ideal) {
  for (auto x : ideal) m.check_element(x);
  std::vector<char> in(m.size, 0);
  for (auto x : ideal) in[x] = 1;
  for (auto x : ideal)
    for (element s = 0; s < m.size; ++s) {
      if (!in[m.at(x, s)] || !in[m.at(s, x)]) return std::make_pair(x, s);
    }
  return std::nullopt;
}

std::pair<FiniteMonoid, Homomorphism> rees_quotient(const FiniteMonoid& m, const ElementSet& ideal_raw) {
  ElementSet ideal = normalized_set(ideal_raw);
  if (ideal.empty()) raise(errc::not_an_ideal, "empty ideal");
  if (auto bad = ideal_violation(m, ideal))
    raise(errc::not_an_ideal, "witness x=" + std::to_string(bad->first) + " s=" + std::to_string(bad->second));

  std::vector<char> in(m.size, 0);
  for (auto x : ideal) in[x] = 1;
  // layout: surviving elements in ascending order, collapsed zero last
  std::vector<element> proj(m.size);
  std::vector<element> back;
  for (element x = 0; x < m.size; ++x)
    if (!in[x]) {
      proj[x] = static_cast<element>(back.size());
      back.push_back(x);
    }
  const element zero = static_cast<element>(back.size());
  for (auto x : ideal) proj[x] = zero;

  FiniteMonoid q;
  q.size = zero + 1;
  q.table.assign(std::size_t(q.size) * q.size, zero);
  for (element a = 0; a < zero; ++a)
    for (element b = 0; b < zero; ++b) q.table[std::size_t(a) * q.size + b] = proj[m.at(back[a], back[b])];
  // zero row/column already absorbing
  if (in[m.identity]) {
    // the ideal contains 1, so it is all of M and the quotient is trivial
    q.identity = zero;
  } else {
    q.identity = proj[m.identity];
  }
  q.zero = zero;
  for (auto g : m.generators) q.generators.push_back(proj[g]);
  q.generators.push_back(zero);
  if (!m.names.empty()) {
    for (element a = 0; a < zero; ++a) q.names.push_back(m.name_of(back[a]));
    q.names.push_back("0");
  }
  q = build_monoid(std::move(q));
  Homomorphism h = check_homomorphism(m, q, proj);
  return {std::move(q), std::move(h)};
}

std::pair<FiniteMonoid, Homomorphism> quotient_by(const FiniteMonoid& m, const Congruence& pi) {
  if (pi.partition.size() != m.size) raise(errc::invalid_parameter, "partition size mismatch");
  if (pi.side != Side::two_sided || !pi.verified)
    raise(errc::not_a_congruence, "quotient needs a verified two-sided congruence");
  Partition p = pi.partition;
  p.canonicalize();
  auto classes = p.classes();
  FiniteMonoid q;
  q.size = p.count;
  q.table.resize(std::size_t(q.size) * q.size);
  for (std::uint32_t a = 0; a < p.count; ++a)
    for (std::uint32_t b = 0; b < p.count; ++b) {
      element prod = p.cls[m.at(classes[a][0], classes[b][0])];
      // well-definedness scan: every representative pair must agree
      for (auto x : classes[a])
        for (auto y : classes[b])
          if (p.cls[m.at(x, y)] != prod)
            raise(errc::not_a_congruence, "product of classes " + std::to_string(a) + "," + std::to_string(b) + " ill-defined");
      q.table[std::size_t(a) * q.size + b] = prod;
    }
  q.identity = p.cls[m.identity];
  for (auto g : m.generators) q.generators.push_back(p.cls[g]);
  if (!m.names.empty()) {
    for (auto& c : classes) {
      std::string nm;
      if (c.size() == 1) nm = m.name_of(c[0]);
      else {
        nm = "{";
        for (std::size_t i = 0; i < c.size(); ++i) nm += (i ? " " : "") + m.name_of(c[i]);
        nm += "}";
      }
      q.names.push_back(nm);
    }
  }
  q = build_monoid(std::move(q));
  Homomorphism h = check_homomorphism(m, q, std::vector<element>(p.cls.begin(), p.cls.end()));
  return {std::move(q), std::move(h)};
}

namespace {
RegularityReport regularity_impl(const element* table, std::uint32_t n) {
  RegularityReport r;
  r.witness = kernels::regularity_witnesses(table, n);
  r.regular = true;
  for (element x = 0; x < n; ++x) {
    if (table[std::size_t(x) * n + x] == x) r.idempotents.push_back(x);
    if (!r.witness[x]) r.regular = false;
  }
  return r;
}
}  // namespace

RegularityReport regularity_report(const FiniteMonoid& m) { return regularity_impl(m.table.data(), m.size); }
RegularityReport regularity_report(const SemigroupTable& s) { return regularity_impl(s.table.data(), s.size); }

FiniteMonoid opposite(const FiniteMonoid& m) {
  FiniteMonoid o = m;
  for (element x = 0; x < m.size; ++x)
    for (element y = 0; y < m.size; ++y) o.table[std::size_t(x) * m.size + y] = m.at(y, x);
  return build_monoid(std::move(o));
}

namespace {

// cheap per-element invariants preserved by isomorphism
struct ElementProfile {
  bool idem;
  std::uint32_t power_period;  // size of <x>
  std::uint32_t row_fixed;     // #{y : xy = y}
  std::uint32_t col_fixed;
  std::uint32_t occurrences;   // how often x appears in the table
  bool operator==(const ElementProfile&) const = default;
};

std::vector<ElementProfile> profiles(const FiniteMonoid& m) {
  std::vector<ElementProfile> out(m.size);
  std::vector<std::uint32_t> occ(m.size, 0);
  for (auto v : m.table) occ[v]++;
  for (element x = 0; x < m.size; ++x) {
    ElementProfile p;
    p.idem = m.is_idempotent(x);
    // orbit of x under repeated right multiplication by x
    std::vector<char> seen(m.size, 0);
    element cur = x;
    std::uint32_t len = 0;
    while (!seen[cur]) {
      seen[cur] = 1;
      ++len;
      cur = m.at(cur, x);
    }
    p.power_period = len;
    p.row_fixed = p.col_fixed = 0;
    for (element y = 0; y < m.size; ++y) {
      if (m.at(x, y) == y) p.row_fixed++;
      if (m.at(y, x) == y) p.col_fixed++;
    }
    p.occurrences = occ[x];
    out[x] = p;
  }
  return out;
}

// greedy generating set: repeatedly add the smallest element outside the
// current closure
std::vector<element> small_generating_set(const FiniteMonoid& m) {
  std::vector<element> gens;
  std::vector<char> closed(m.size, 0);
  auto close = [&]() {
    std::deque<element> q;
    for (element x = 0; x < m.size; ++x)
      if (closed[x]) q.push_back(x);
    while (!q.empty()) {
      element x = q.front();
      q.pop_front();
      for (auto g : gens) {
        for (element y : {m.at(x, g), m.at(g, x)}) {
          if (!closed[y]) {
            closed[y] = 1;
            q.push_back(y);
          }
        }
      }
    }
  };
  closed[m.identity] = 1;
  for (;;) {
    close();
    element next = m.size;
    for (element x = 0; x < m.size; ++x)
      if (!closed[x]) {
        next = x;
        break;
      }
    if (next == m.size) break;
    gens.push_back(next);
    closed[next] = 1;
  }
  return gens;
}

struct IsoSearch {
  const FiniteMonoid& a;
  const FiniteMonoid& b;
  std::vector<ElementProfile> pa, pb;
  std::vector<element> gens;
  std::vector<element> map;      // a -> b, UINT32_MAX when unset
  std::vector<char> used;        // image taken
  std::vector<element> defined;  // stack of defined source elements

  bool extend() {
    // close the partial map under products; detect conflicts
    for (std::size_t i = 0; i < defined.size(); ++i)
      for (std::size_t j = 0; j < defined.size(); ++j) {
        element x = defined[i], y = defined[j];
        element p = a.at(x, y);
        element q = b.at(map[x], map[y]);
        if (map[p] == UINT32_MAX) {
          if (used[q] || !(pa[p] == pb[q])) return false;
          map[p] = q;
          used[q] = 1;
          defined.push_back(p);
        } else if (map[p] != q) {
          return false;
        }
      }
    return true;
  }

  bool assign(std::size_t gi) {
    if (gi == gens.size()) return defined.size() == a.size;
    element g = gens[gi];
    if (map[g] != UINT32_MAX) return assign(gi + 1);
    auto saved_map = map;
    auto saved_used = used;
    auto saved_defined = defined;
    for (element cand = 0; cand < b.size; ++cand) {
      if (used[cand] || !(pa[g] == pb[cand])) continue;
      map[g] = cand;
      used[cand] = 1;
      defined.push_back(g);
      if (extend() && assign(gi + 1)) return true;
      map = saved_map;
      used = saved_used;
      defined = saved_defined;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<element>> monoid_iso(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size > kIsoOrderBound || b.size > kIsoOrderBound)
    raise(errc::order_bound_exceeded, "isomorphism search bounded at order " + std::to_string(kIsoOrderBound));
  if (a.size != b.size) return std::nullopt;
  IsoSearch s{a, b, profiles(a), profiles(b), small_generating_set(a),
              std::vector<element>(a.size, UINT32_MAX), std::vector<char>(b.size, 0), {}};
  {
    // profile multisets must agree
    auto ma = s.pa;
    auto mb = s.pb;
    auto key = [](const ElementProfile& p) {
      return std::tuple(p.idem, p.power_period, p.row_fixed, p.col_fixed, p.occurrences);
    };
    auto lt = [&](const ElementProfile& x, const ElementProfile& y) { return key(x) < key(y); };
    std::sort(ma.begin(), ma.end(), lt);
    std::sort(mb.begin(), mb.end(), lt);
    if (!(ma == mb)) return std::nullopt;
  }
  s.map[a.identity] = b.identity;
  s.used[b.identity] = 1;
  s.defined.push_back(a.identity);
  if (!s.extend()) return std::nullopt;
  if (!s.assign(0)) return std::nullopt;
  // final safety: verify the map is a bijective homomorphism
  for (element x = 0; x < a.size; ++x)
    for (element y = 0; y < a.size; ++y)
      if (s.map[a.at(x, y)] != b.at(s.map[x], s.map[y])) raise(errc::internal_error, "iso search produced a non-homomorphism");
  return s.map;
}

}  // namespace monoidkit
