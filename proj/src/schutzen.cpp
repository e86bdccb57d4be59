#include "monoidkit/schutzen.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace monoidkit {

std::uint32_t PermGroup::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order(); ++b)
    if (mul(a, b) == identity_index && mul(b, a) == identity_index) return b;
  raise(errc::internal_error, "permutation without inverse");
}

std::uint32_t PermGroup::element_order(std::uint32_t a) const {
  std::uint32_t cur = a, k = 1;
  while (cur != identity_index) {
    cur = mul(cur, a);
    ++k;
  }
  return k;
}

PermGroup PermGroup::from_perms(std::vector<std::vector<std::uint32_t>> perms) {
  if (perms.empty()) raise(errc::invalid_parameter, "empty permutation set");
  PermGroup g;
  g.degree = static_cast<std::uint32_t>(perms[0].size());
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  g.perms = std::move(perms);
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> ident(g.degree);
  for (std::uint32_t i = 0; i < g.degree; ++i) ident[i] = i;
  auto find = [&](const std::vector<std::uint32_t>& p) {
    auto it = std::lower_bound(g.perms.begin(), g.perms.end(), p);
    if (it == g.perms.end() || *it != p) raise(errc::internal_error, "permutation set not closed");
    return static_cast<std::uint32_t>(it - g.perms.begin());
  };
  g.identity_index = find(ident);
  g.table.resize(std::size_t(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      std::vector<std::uint32_t> c(g.degree);
      for (std::uint32_t i = 0; i < g.degree; ++i) c[i] = g.perms[b][g.perms[a][i]];  // a then b
      g.table[std::size_t(a) * n + b] = find(c);
    }
  for (std::uint32_t a = 0; a < n; ++a) g.inverse(a);  // existence check
  return g;
}

PermGroup PermGroup::regular_representation(const FiniteMonoid& group) {
  if (!group.is_group()) raise(errc::not_a_group, "regular representation needs a group");
  std::vector<std::vector<std::uint32_t>> perms;
  for (element a = 0; a < group.size; ++a) {
    std::vector<std::uint32_t> p(group.size);
    for (element x = 0; x < group.size; ++x) p[x] = group.at(x, a);
    perms.push_back(std::move(p));
  }
  return from_perms(std::move(perms));
}

namespace {

void require_h_class(const FiniteMonoid& m, const GreenStructure& g, const ElementSet& h) {
  if (h.empty()) raise(errc::not_an_h_class, "empty set");
  for (auto x : h) m.check_element(x);
  auto cls = g.h.cls[h[0]];
  std::uint32_t count = 0;
  for (element x = 0; x < m.size; ++x) count += g.h.cls[x] == cls;
  if (count != h.size()) raise(errc::not_an_h_class, "set is not a full H-class");
  for (auto x : h)
    if (g.h.cls[x] != cls) raise(errc::not_an_h_class, "elements in different H-classes");
}

}  // namespace

ElementSet stabilizer(const FiniteMonoid& m, const GreenStructure& g, const ElementSet& h_raw) {
  ElementSet h = normalized_set(h_raw);
  require_h_class(m, g, h);
  std::vector<char> in(m.size, 0);
  for (auto x : h) in[x] = 1;
  // fast path: one-point characterisation with the minimal h
  ElementSet stab;
  for (element s = 0; s < m.size; ++s)
    if (in[m.at(h[0], s)]) stab.push_back(s);
  // cross-check against the set-wise definition Hs = H for every h
  for (auto s : stab) {
    std::vector<char> image(m.size, 0);
    for (auto x : h) {
      if (!in[m.at(x, s)]) raise(errc::internal_error, "one-point stabilizer too large");
      image[m.at(x, s)] = 1;
    }
    for (auto x : h)
      if (!image[x]) raise(errc::internal_error, "stabilizer element not surjective on H");
  }
  // Stab(H) is a submonoid
  std::vector<char> in_stab(m.size, 0);
  for (auto s : stab) in_stab[s] = 1;
  if (!in_stab[m.identity]) raise(errc::internal_error, "stabilizer misses identity");
  for (auto s : stab)
    for (auto t : stab)
      if (!in_stab[m.at(s, t)]) raise(errc::internal_error, "stabilizer not closed");
  return stab;
}

ElementSet stabilizer(const FiniteMonoid& m, const ElementSet& h_class) {
  auto g = green_structure(m);
  return stabilizer(m, g, h_class);
}

SchutzGroup schutzenberger_group(const FiniteMonoid& m, const GreenStructure& g, const ElementSet& h_raw) {
  SchutzGroup sg;
  sg.h_class = normalized_set(h_raw);
  require_h_class(m, g, sg.h_class);
  sg.base_point = sg.h_class[0];
  sg.stabilizer = stabilizer(m, g, sg.h_class);

  const auto& h = sg.h_class;
  auto pos = [&](element x) {
    return static_cast<std::uint32_t>(std::lower_bound(h.begin(), h.end(), x) - h.begin());
  };

  // sigma by the all-points definition, cross-checked against the
  // one-point test hu = hv
  const std::uint32_t ns = static_cast<std::uint32_t>(sg.stabilizer.size());
  std::vector<std::vector<std::uint32_t>> act(ns);
  for (std::uint32_t i = 0; i < ns; ++i) {
    act[i].resize(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) act[i][k] = pos(m.at(h[k], sg.stabilizer[i]));
  }
  std::vector<std::uint32_t> labels(ns, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < ns; ++i) {
    if (labels[i] != UINT32_MAX) continue;
    labels[i] = next;
    for (std::uint32_t j = i + 1; j < ns; ++j)
      if (labels[j] == UINT32_MAX && act[i] == act[j]) labels[j] = next;
    ++next;
  }
  const std::uint32_t base = pos(sg.base_point);
  for (std::uint32_t i = 0; i < ns; ++i)
    for (std::uint32_t j = 0; j < ns; ++j)
      if ((labels[i] == labels[j]) != (act[i][base] == act[j][base]))
        raise(errc::internal_error, "sigma one-point test disagrees with all-points definition");
  sg.sigma.cls = labels;
  sg.sigma.count = next;
  sg.sigma.canonicalize();

  std::vector<std::vector<std::uint32_t>> perms;
  sg.class_to_perm.assign(sg.sigma.count, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> class_rep_act(sg.sigma.count);
  for (std::uint32_t i = 0; i < ns; ++i)
    if (class_rep_act[sg.sigma.cls[i]].empty()) class_rep_act[sg.sigma.cls[i]] = act[i];
  for (auto& p : class_rep_act) {
    std::vector<char> seen(h.size(), 0);
    for (auto v : p) {
      if (seen[v]) raise(errc::internal_error, "stabilizer element acts non-injectively on H");
      seen[v] = 1;
    }
    perms.push_back(p);
  }
  sg.group = PermGroup::from_perms(perms);
  for (std::uint32_t c = 0; c < sg.sigma.count; ++c) {
    auto it = std::lower_bound(sg.group.perms.begin(), sg.group.perms.end(), class_rep_act[c]);
    sg.class_to_perm[c] = static_cast<std::uint32_t>(it - sg.group.perms.begin());
  }

  if (sg.group.order() != h.size())
    raise(errc::internal_error, "|Gamma(H)| != |H|");
  // regular action: exactly one permutation maps h1 to h2
  for (std::uint32_t p1 = 0; p1 < h.size(); ++p1)
    for (std::uint32_t p2 = 0; p2 < h.size(); ++p2) {
      std::uint32_t hits = 0;
      for (auto& p : sg.group.perms) hits += p[p1] == p2;
      if (hits != 1) raise(errc::internal_error, "Gamma(H) action not regular");
    }
  return sg;
}

SchutzGroup schutzenberger_group(const FiniteMonoid& m, const ElementSet& h_class) {
  auto g = green_structure(m);
  return schutzenberger_group(m, g, h_class);
}

bool GroupHom::bijective() const {
  if (source.order() != target.order()) return false;
  std::vector<char> hit(target.order(), 0);
  for (auto v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

namespace {

std::vector<std::uint32_t> group_generating_set(const PermGroup& g) {
  std::vector<std::uint32_t> gens;
  std::vector<char> closed(g.order(), 0);
  closed[g.identity_index] = 1;
  auto close = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t a = 0; a < g.order(); ++a) {
        if (!closed[a]) continue;
        for (auto b : gens) {
          std::uint32_t c = g.mul(a, b);
          if (!closed[c]) {
            closed[c] = 1;
            changed = true;
          }
        }
      }
    }
  };
  for (;;) {
    std::uint32_t next = g.order();
    for (std::uint32_t a = 0; a < g.order(); ++a)
      if (!closed[a]) {
        next = a;
        break;
      }
    if (next == g.order()) break;
    gens.push_back(next);
    closed[next] = 1;
    close();
  }
  return gens;
}

struct GroupIsoSearch {
  const PermGroup& a;
  const PermGroup& b;
  std::vector<std::uint32_t> ord_a, ord_b;
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> map;
  std::vector<char> used;
  std::vector<std::uint32_t> defined;

  bool extend() {
    for (std::size_t i = 0; i < defined.size(); ++i)
      for (std::size_t j = 0; j < defined.size(); ++j) {
        std::uint32_t x = defined[i], y = defined[j];
        std::uint32_t p = a.mul(x, y), q = b.mul(map[x], map[y]);
        if (map[p] == UINT32_MAX) {
          if (used[q] || ord_a[p] != ord_b[q]) return false;
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
    if (gi == gens.size()) return defined.size() == a.order();
    std::uint32_t g = gens[gi];
    if (map[g] != UINT32_MAX) return assign(gi + 1);
    auto sm = map;
    auto su = used;
    auto sd = defined;
    for (std::uint32_t cand = 0; cand < b.order(); ++cand) {
      if (used[cand] || ord_a[g] != ord_b[cand]) continue;
      map[g] = cand;
      used[cand] = 1;
      defined.push_back(g);
      if (extend() && assign(gi + 1)) return true;
      map = sm;
      used = su;
      defined = sd;
    }
    return false;
  }
};

}  // namespace

std::optional<GroupHom> group_iso(const PermGroup& a, const PermGroup& b) {
  if (a.order() > kGroupOrderBound || b.order() > kGroupOrderBound)
    raise(errc::order_bound_exceeded, "group_iso bounded at order " + std::to_string(kGroupOrderBound));
  if (a.order() != b.order()) return std::nullopt;
  GroupIsoSearch s{a, b, {}, {}, group_generating_set(a),
                   std::vector<std::uint32_t>(a.order(), UINT32_MAX),
                   std::vector<char>(b.order(), 0), {}};
  for (std::uint32_t x = 0; x < a.order(); ++x) s.ord_a.push_back(a.element_order(x));
  for (std::uint32_t x = 0; x < b.order(); ++x) s.ord_b.push_back(b.element_order(x));
  {
    auto pa = s.ord_a, pb = s.ord_b;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return std::nullopt;
  }
  s.map[a.identity_index] = b.identity_index;
  s.used[b.identity_index] = 1;
  s.defined.push_back(a.identity_index);
  if (!s.assign(0)) return std::nullopt;
  GroupHom h{a, b, s.map};
  for (std::uint32_t x = 0; x < a.order(); ++x)
    for (std::uint32_t y = 0; y < a.order(); ++y)
      if (h.map[a.mul(x, y)] != b.mul(h.map[x], h.map[y]))
        raise(errc::internal_error, "group_iso produced a non-homomorphism");
  return h;
}

namespace {

// conjugacy classes of a group given by index-multiplication closures
template <typename Mul, typename Inv>
std::vector<std::vector<std::uint32_t>> conj_classes(std::uint32_t n, Mul mul, Inv inv) {
  std::vector<std::uint32_t> cls(n, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (cls[x] != UINT32_MAX) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t g = 0; g < n; ++g) {
      std::uint32_t y = mul(mul(inv(g), x), g);
      if (cls[y] == UINT32_MAX) {
        cls[y] = static_cast<std::uint32_t>(classes.size());
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

template <typename Mul, typename Inv>
std::vector<std::vector<std::uint32_t>> normal_subgroups_impl(std::uint32_t n, std::uint32_t identity,
                                                              Mul mul, Inv inv) {
  auto classes = conj_classes(n, mul, inv);
  std::uint32_t identity_class = 0;
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].begin(), classes[c].end(), identity)) identity_class = c;
  std::vector<std::uint32_t> class_of(n);
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    for (auto x : classes[c]) class_of[x] = c;

  // close a union of conjugacy classes under multiplication, tracked as a
  // class-index set so the BFS stays tiny
  auto close = [&](std::set<std::uint32_t> chosen) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint32_t> members;
      for (auto c : chosen) members.insert(members.end(), classes[c].begin(), classes[c].end());
      for (auto x : members)
        for (auto y : members) {
          std::uint32_t c = class_of[mul(x, y)];
          if (!chosen.count(c)) {
            chosen.insert(c);
            changed = true;
          }
        }
    }
    return chosen;
  };

  std::set<std::set<std::uint32_t>> seen;
  std::deque<std::set<std::uint32_t>> queue;
  auto start = close({identity_class});
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (std::uint32_t c = 0; c < classes.size(); ++c) {
      if (cur.count(c)) continue;
      auto bigger = cur;
      bigger.insert(c);
      bigger = close(bigger);
      if (!seen.count(bigger)) {
        seen.insert(bigger);
        queue.push_back(bigger);
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> out;
  for (auto& chosen : seen) {
    std::vector<std::uint32_t> members;
    for (auto c : chosen) members.insert(members.end(), classes[c].begin(), classes[c].end());
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> normal_subgroups(const PermGroup& g) {
  if (g.order() > kGroupOrderBound)
    raise(errc::order_bound_exceeded, "normal_subgroups bounded at order " + std::to_string(kGroupOrderBound));
  return normal_subgroups_impl(
      g.order(), g.identity_index, [&](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); },
      [&](std::uint32_t a) { return g.inverse(a); });
}

std::vector<ElementSet> normal_subgroups_of(const FiniteMonoid& group) {
  if (!group.is_group()) raise(errc::not_a_group, "normal_subgroups_of");
  if (group.size > kGroupOrderBound) raise(errc::order_bound_exceeded, "normal_subgroups_of");
  auto inv = [&](element a) {
    for (element b = 0; b < group.size; ++b)
      if (group.at(a, b) == group.identity) return b;
    raise(errc::internal_error, "group element without inverse");
  };
  return normal_subgroups_impl(
      group.size, group.identity, [&](element a, element b) { return group.at(a, b); }, inv);
}

bool is_subgroup(const FiniteMonoid& group, const ElementSet& subset) {
  if (subset.empty()) return false;
  for (auto x : subset) group.check_element(x);
  if (!set_contains(subset, group.identity)) return false;
  for (auto x : subset)
    for (auto y : subset)
      if (!set_contains(subset, group.at(x, y))) return false;
  // closure of a finite subset containing 1 gives inverses for free
  return true;
}

bool is_normal_subgroup(const FiniteMonoid& group, const ElementSet& subset) {
  if (!is_subgroup(group, subset)) return false;
  auto inv = [&](element a) {
    for (element b = 0; b < group.size; ++b)
      if (group.at(a, b) == group.identity) return b;
    return element(0);
  };
  for (element g = 0; g < group.size; ++g)
    for (auto x : subset)
      if (!set_contains(subset, group.at(group.at(inv(g), x), g))) return false;
  return true;
}

GroupHom induced_schutz_hom(const Homomorphism& phi, const ElementSet& h_class) {
  const auto& m = phi.source;
  const auto& n = phi.target;
  auto gm = green_structure(m);
  auto sg = schutzenberger_group(m, gm, h_class);

  auto gn = green_structure(n);
  element image_h = phi.apply(sg.base_point);
  ElementSet h_bar;
  for (element x = 0; x < n.size; ++x)
    if (gn.h.cls[x] == gn.h.cls[image_h]) h_bar.push_back(x);
  auto sg_bar = schutzenberger_group(n, gn, h_bar);

  auto bar_pos = [&](element x) {
    return static_cast<std::uint32_t>(std::lower_bound(h_bar.begin(), h_bar.end(), x) - h_bar.begin());
  };
  // image of a stabilizer element as a permutation of H-bar
  auto perm_of = [&](element s) {
    std::vector<std::uint32_t> p(h_bar.size());
    for (std::size_t k = 0; k < h_bar.size(); ++k) {
      element y = n.at(h_bar[k], phi.apply(s));
      if (!set_contains(h_bar, y)) raise(errc::internal_error, "image of stabilizer leaves H-bar");
      p[k] = bar_pos(y);
    }
    return p;
  };

  std::vector<std::uint32_t> map(sg.group.order(), UINT32_MAX);
  for (std::size_t i = 0; i < sg.stabilizer.size(); ++i) {
    auto p = perm_of(sg.stabilizer[i]);
    auto it = std::lower_bound(sg_bar.group.perms.begin(), sg_bar.group.perms.end(), p);
    if (it == sg_bar.group.perms.end() || *it != p)
      raise(errc::internal_error, "induced permutation not in Gamma(H-bar)");
    std::uint32_t target = static_cast<std::uint32_t>(it - sg_bar.group.perms.begin());
    std::uint32_t src = sg.class_to_perm[sg.sigma.cls[i]];
    if (map[src] == UINT32_MAX) map[src] = target;
    else if (map[src] != target) raise(errc::internal_error, "induced map ill-defined on a sigma class");
  }
  for (auto v : map)
    if (v == UINT32_MAX) raise(errc::internal_error, "induced map not total");
  GroupHom hom{sg.group, sg_bar.group, std::move(map)};
  for (std::uint32_t x = 0; x < hom.source.order(); ++x)
    for (std::uint32_t y = 0; y < hom.source.order(); ++y)
      if (hom.map[hom.source.mul(x, y)] != hom.target.mul(hom.map[x], hom.map[y]))
        raise(errc::internal_error, "induced map not multiplicative");
  return hom;
}

}  // namespace monoidkit
