#include "monoidkit/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "monoidkit/kernels.hpp"

namespace monoidkit {

namespace {

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

Partition dsu_partition(Dsu& d, std::uint32_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t x = 0; x < n; ++x) labels[x] = d.find(x);
  return Partition::from_labels(labels);
}

}  // namespace

Congruence principal_congruence(const FiniteMonoid& m,
                                const std::vector<std::pair<element, element>>& pairs, Side side) {
  Dsu dsu(m.size);
  std::deque<std::pair<element, element>> work;
  for (auto [a, b] : pairs) {
    m.check_element(a);
    m.check_element(b);
    work.emplace_back(a, b);
  }
  // closing newly merged pairs under generator multiplication suffices:
  // stability under generators plus transitivity gives all products
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!dsu.unite(a, b)) continue;
    for (auto g : m.generators) {
      if (side != Side::left) work.emplace_back(m.at(a, g), m.at(b, g));
      if (side != Side::right) work.emplace_back(m.at(g, a), m.at(g, b));
    }
  }
  Congruence c{dsu_partition(dsu, m.size), side, false};
  if (auto v = congruence_violation(m, c.partition, side))
    raise(errc::internal_error, "principal closure not stable");
  c.verified = true;
  return c;
}

std::optional<CongruenceViolation> congruence_violation(const FiniteMonoid& m, const Partition& pi, Side side) {
  if (pi.size() != m.size) raise(errc::invalid_parameter, "partition size mismatch");
  // checking each element against its class representative covers all pairs
  std::vector<element> rep(pi.count, UINT32_MAX);
  for (element x = 0; x < m.size; ++x)
    if (rep[pi.cls[x]] == UINT32_MAX) rep[pi.cls[x]] = x;
  for (element x = 0; x < m.size; ++x) {
    element r = rep[pi.cls[x]];
    if (r == x) continue;
    for (element s = 0; s < m.size; ++s) {
      if (side != Side::left && pi.cls[m.at(r, s)] != pi.cls[m.at(x, s)])
        return CongruenceViolation{r, x, s, false};
      if (side != Side::right && pi.cls[m.at(s, r)] != pi.cls[m.at(s, x)])
        return CongruenceViolation{r, x, s, true};
    }
  }
  return std::nullopt;
}

bool is_congruence(const FiniteMonoid& m, const Partition& pi, Side side) {
  return !congruence_violation(m, pi, side).has_value();
}

Congruence largest_contained(const FiniteMonoid& m, const Partition& pi, Side side) {
  if (pi.size() != m.size) raise(errc::invalid_parameter, "partition size mismatch");
  Partition p = pi;
  p.canonicalize();
  for (;;) {
    // signature of x: current class, then classes of x*g (and/or g*x)
    std::vector<std::vector<std::uint32_t>> sig(m.size);
    for (element x = 0; x < m.size; ++x) {
      auto& s = sig[x];
      s.push_back(p.cls[x]);
      for (auto g : m.generators) {
        if (side != Side::left) s.push_back(p.cls[m.at(x, g)]);
        if (side != Side::right) s.push_back(p.cls[m.at(g, x)]);
      }
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> labels(m.size);
    for (element x = 0; x < m.size; ++x) {
      auto [it, _] = ids.try_emplace(sig[x], static_cast<std::uint32_t>(ids.size()));
      labels[x] = it->second;
    }
    Partition refined = Partition::from_labels(labels);
    if (refined.count == p.count) break;
    p = refined;
  }
  Congruence c{p, side, false};
  if (!p.refines(pi)) raise(errc::internal_error, "refinement escaped pi");
  if (congruence_violation(m, p, side)) raise(errc::internal_error, "refinement fixpoint not a congruence");
  c.verified = true;
  return c;
}

Congruence largest_contained_definitional(const FiniteMonoid& m, const Partition& pi, Side side) {
  if (pi.size() != m.size) raise(errc::invalid_parameter, "partition size mismatch");
  const std::uint32_t n = m.size;
  std::vector<std::uint32_t> labels(n);
  if (side == Side::two_sided) {
    // fingerprint over all pairs (u, v): class of u*x*v
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (element x = 0; x < n; ++x) {
      sig[x].reserve(std::size_t(n) * n);
      for (element u = 0; u < n; ++u) {
        element ux = m.at(u, x);
        for (element v = 0; v < n; ++v) sig[x].push_back(pi.cls[m.at(ux, v)]);
      }
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    for (element x = 0; x < n; ++x) labels[x] = ids.try_emplace(sig[x], ids.size()).first->second;
  } else {
    std::vector<element> mults(n);
    std::iota(mults.begin(), mults.end(), 0u);
    std::vector<std::uint32_t> sig(std::size_t(n) * n);
    if (side == Side::right) {
      kernels::right_signatures(m.table.data(), n, pi.cls.data(), mults.data(), n, sig.data());
    } else {
      // left signatures: class of s*x, i.e. column scans
      for (element x = 0; x < n; ++x)
        for (element s = 0; s < n; ++s) sig[std::size_t(x) * n + s] = pi.cls[m.at(s, x)];
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    for (element x = 0; x < n; ++x) {
      std::vector<std::uint32_t> row(sig.begin() + std::size_t(x) * n, sig.begin() + std::size_t(x + 1) * n);
      labels[x] = ids.try_emplace(std::move(row), ids.size()).first->second;
    }
  }
  Congruence c{Partition::from_labels(labels), side, false};
  if (!c.partition.refines(pi)) raise(errc::internal_error, "definitional Sigma escaped pi");
  if (congruence_violation(m, c.partition, side)) raise(errc::internal_error, "definitional Sigma not a congruence");
  c.verified = true;
  return c;
}

ElementSet q_set(const FiniteMonoid& m, element s, const ElementSet& x) {
  m.check_element(s);
  std::vector<char> in(m.size, 0);
  for (auto v : x) {
    m.check_element(v);
    in[v] = 1;
  }
  ElementSet out;
  for (element y = 0; y < m.size; ++y)
    if (in[m.at(s, y)]) out.push_back(y);
  return out;
}

FiniteAction action_from_congruence(const FiniteMonoid& m, const Congruence& rho) {
  if (rho.partition.size() != m.size) raise(errc::invalid_parameter, "partition size mismatch");
  if (rho.side == Side::left || !rho.verified || !is_congruence(m, rho.partition, Side::right))
    raise(errc::not_a_congruence, "action needs a verified right congruence");
  Partition p = rho.partition;
  p.canonicalize();
  FiniteAction a;
  a.monoid = m;
  a.npoints = p.count;
  a.act.resize(std::size_t(p.count) * m.size);
  std::vector<element> rep(p.count, UINT32_MAX);
  for (element x = 0; x < m.size; ++x)
    if (rep[p.cls[x]] == UINT32_MAX) rep[p.cls[x]] = x;
  for (std::uint32_t c = 0; c < p.count; ++c)
    for (element s = 0; s < m.size; ++s) a.act[std::size_t(c) * m.size + s] = p.cls[m.at(rep[c], s)];
  a.source = p.cls[m.identity];
  return a;
}

Congruence congruence_from_action(const FiniteAction& a) {
  if (!a.source) raise(errc::no_source, "action has no source point");
  const auto& m = a.monoid;
  std::vector<std::uint32_t> labels(m.size);
  for (element x = 0; x < m.size; ++x) labels[x] = a.at(*a.source, x);
  Congruence c{Partition::from_labels(labels), Side::right, false};
  if (congruence_violation(m, c.partition, Side::right))
    raise(errc::internal_error, "determined relation not a right congruence");
  c.verified = true;
  return c;
}

Congruence kernel_of_action(const FiniteAction& a) {
  const auto& m = a.monoid;
  std::vector<std::vector<std::uint32_t>> sig(m.size);
  for (element x = 0; x < m.size; ++x) {
    sig[x].resize(a.npoints);
    for (std::uint32_t p = 0; p < a.npoints; ++p) sig[x][p] = a.at(p, x);
  }
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(m.size);
  for (element x = 0; x < m.size; ++x) labels[x] = ids.try_emplace(sig[x], ids.size()).first->second;
  Congruence c{Partition::from_labels(labels), Side::two_sided, false};
  if (congruence_violation(m, c.partition, Side::two_sided))
    raise(errc::internal_error, "action kernel not a two-sided congruence");
  c.verified = true;
  return c;
}

namespace {

// enumerate set partitions of {0..n-1} as restricted growth strings,
// lexicographic order
template <typename Fn>
void for_each_partition(std::uint32_t n, Fn fn) {
  if (n == 0) return;
  std::vector<std::uint32_t> a(n, 0);
  std::vector<std::uint32_t> mx(n, 0);  // mx[k] = max(a[0..k])
  for (;;) {
    fn(a);
    std::uint32_t k = n;
    while (--k > 0)
      if (a[k] <= mx[k - 1]) break;  // a[k] may still grow at this position
    if (k == 0) break;
    a[k]++;
    mx[k] = std::max(mx[k - 1], a[k]);
    for (std::uint32_t t = k + 1; t < n; ++t) {
      a[t] = 0;
      mx[t] = mx[t - 1];
    }
  }
}

}  // namespace

std::vector<Partition> all_partitions(std::uint32_t n, std::uint32_t bound) {
  if (n > bound) raise(errc::order_bound_exceeded, "partition enumeration bounded at " + std::to_string(bound));
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<std::uint32_t>& rgs) { out.push_back(Partition::from_labels(rgs)); });
  return out;
}

std::vector<Congruence> enumerate_congruences(const FiniteMonoid& m, Side side, std::uint32_t bound) {
  if (m.size > bound) raise(errc::order_bound_exceeded, "enumeration bounded at " + std::to_string(bound));
  std::vector<Congruence> out;
  for_each_partition(m.size, [&](const std::vector<std::uint32_t>& rgs) {
    Partition p = Partition::from_labels(rgs);
    if (is_congruence(m, p, side)) out.push_back(Congruence{std::move(p), side, true});
  });
  return out;
}

std::vector<Congruence> enumerate_congruences_on(const FiniteMonoid& m, const ElementSet& sub_raw, Side side,
                                                 std::uint32_t bound) {
  ElementSet sub = normalized_set(sub_raw);
  if (sub.size() > bound) raise(errc::order_bound_exceeded, "enumeration bounded at " + std::to_string(bound));
  for (auto x : sub) m.check_element(x);
  std::vector<std::uint32_t> pos(m.size, UINT32_MAX);
  for (std::uint32_t i = 0; i < sub.size(); ++i) pos[sub[i]] = i;
  for (auto x : sub)
    for (auto y : sub)
      if (pos[m.at(x, y)] == UINT32_MAX)
        raise(errc::invalid_parameter, "subset not closed under multiplication");

  auto stable = [&](const Partition& p) {
    for (std::uint32_t i = 0; i < sub.size(); ++i)
      for (std::uint32_t j = 0; j < sub.size(); ++j) {
        if (p.cls[i] != p.cls[j]) continue;
        for (auto s : sub) {
          if (side != Side::left &&
              p.cls[pos[m.at(sub[i], s)]] != p.cls[pos[m.at(sub[j], s)]])
            return false;
          if (side != Side::right &&
              p.cls[pos[m.at(s, sub[i])]] != p.cls[pos[m.at(s, sub[j])]])
            return false;
        }
      }
    return true;
  };

  std::vector<Congruence> out;
  for_each_partition(static_cast<std::uint32_t>(sub.size()), [&](const std::vector<std::uint32_t>& rgs) {
    Partition p = Partition::from_labels(rgs);
    if (stable(p)) out.push_back(Congruence{std::move(p), side, true});
  });
  return out;
}

RfReport rf_compatible_check(const FiniteMonoid& m, const ElementSet& ideal_raw, std::uint32_t bound) {
  ElementSet ideal = normalized_set(ideal_raw);
  if (auto bad = ideal_violation(m, ideal))
    raise(errc::not_an_ideal, "witness x=" + std::to_string(bad->first) + " s=" + std::to_string(bad->second));
  auto congruences = enumerate_congruences_on(m, ideal, Side::two_sided, bound);
  // search in increasing class count so the first witness is the coarsest
  std::stable_sort(congruences.begin(), congruences.end(),
                   [](const Congruence& a, const Congruence& b) { return a.index() < b.index(); });
  std::vector<std::uint32_t> pos(m.size, UINT32_MAX);
  for (std::uint32_t i = 0; i < ideal.size(); ++i) pos[ideal[i]] = i;

  RfReport report;
  report.ideal = ideal;
  report.compatible = true;
  for (std::uint32_t i = 0; i < ideal.size(); ++i)
    for (std::uint32_t j = i + 1; j < ideal.size(); ++j) {
      RfPairReport pr;
      pr.s = ideal[i];
      pr.t = ideal[j];
      for (const auto& rho : congruences) {
        if (rho.partition.cls[i] == rho.partition.cls[j]) continue;
        // rho united with the diagonal of M
        std::vector<std::uint32_t> labels(m.size);
        for (element x = 0; x < m.size; ++x)
          labels[x] = pos[x] == UINT32_MAX ? ideal.size() + rho.index() + x
                                           : rho.partition.cls[pos[x]];
        Partition ext = Partition::from_labels(labels);
        if (is_congruence(m, ext, Side::two_sided)) {
          pr.separated = true;
          pr.witness = rho.partition;
          break;
        }
      }
      if (!pr.separated) report.compatible = false;
      report.pairs.push_back(std::move(pr));
    }
  return report;
}

}  // namespace monoidkit
