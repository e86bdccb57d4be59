#include "monoidkit/green.hpp"

#include <algorithm>
#include <numeric>

namespace monoidkit {

namespace {

// iterative Tarjan; returns the SCC partition in canonical numbering
Partition sccs(std::uint32_t n, const std::vector<std::vector<element>>& adj) {
  std::vector<std::uint32_t> index(n, UINT32_MAX), low(n, 0), comp(n, UINT32_MAX);
  std::vector<element> stack;
  std::vector<char> on_stack(n, 0);
  std::uint32_t next_index = 0, next_comp = 0;

  struct Frame {
    element v;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (element root = 0; root < n; ++root) {
    if (index[root] != UINT32_MAX) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.edge < adj[f.v].size()) {
        element w = adj[f.v][f.edge++];
        if (index[w] == UINT32_MAX) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        element v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          for (;;) {
            element w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
  Partition p;
  p.cls.assign(comp.begin(), comp.end());
  p.count = next_comp;
  p.canonicalize();
  return p;
}

Partition meet(const Partition& a, const Partition& b) {
  std::vector<std::uint32_t> labels(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) labels[x] = a.cls[x] * b.count + b.cls[x];
  return Partition::from_labels(labels);
}

Partition join(const Partition& a, const Partition& b) {
  const std::uint32_t n = a.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::uint32_t x, std::uint32_t y) { parent[find(x)] = find(y); };
  std::vector<std::uint32_t> rep(std::max(a.count, b.count));
  for (const Partition* p : {&a, &b}) {
    std::fill(rep.begin(), rep.end(), UINT32_MAX);
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t c = p->cls[x];
      if (rep[c] == UINT32_MAX) rep[c] = x;
      else unite(rep[c], x);
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t x = 0; x < n; ++x) labels[x] = find(x);
  return Partition::from_labels(labels);
}

ElementSet row_set(const FiniteMonoid& m, element x) {
  std::vector<char> in(m.size, 0);
  for (element y = 0; y < m.size; ++y) in[m.at(x, y)] = 1;
  ElementSet out;
  for (element y = 0; y < m.size; ++y)
    if (in[y]) out.push_back(y);
  return out;
}

ElementSet col_set(const FiniteMonoid& m, element x) {
  std::vector<char> in(m.size, 0);
  for (element y = 0; y < m.size; ++y) in[m.at(y, x)] = 1;
  ElementSet out;
  for (element y = 0; y < m.size; ++y)
    if (in[y]) out.push_back(y);
  return out;
}

ElementSet two_sided_set(const FiniteMonoid& m, element x) {
  std::vector<char> in(m.size, 0);
  for (element u = 0; u < m.size; ++u) {
    element ux = m.at(u, x);
    for (element v = 0; v < m.size; ++v) in[m.at(ux, v)] = 1;
  }
  ElementSet out;
  for (element y = 0; y < m.size; ++y)
    if (in[y]) out.push_back(y);
  return out;
}

void fill_class_data(const FiniteMonoid& m, GreenStructure& g) {
  auto reps = [&](const Partition& p) {
    std::vector<element> rep(p.count, UINT32_MAX);
    for (element x = 0; x < m.size; ++x)
      if (rep[p.cls[x]] == UINT32_MAX) rep[p.cls[x]] = x;
    return rep;
  };
  for (auto x : reps(g.r)) g.r_ideal.push_back(row_set(m, x));
  for (auto x : reps(g.l)) g.l_ideal.push_back(col_set(m, x));
  for (auto x : reps(g.j)) g.j_ideal.push_back(two_sided_set(m, x));

  g.j_type.assign(g.j.count, {0, 0});
  std::vector<char> seen_r(g.r.count, 0), seen_l(g.l.count, 0);
  for (element x = 0; x < m.size; ++x) {
    if (!seen_r[g.r.cls[x]]) {
      seen_r[g.r.cls[x]] = 1;
      g.j_type[g.j.cls[x]].first++;
    }
    if (!seen_l[g.l.cls[x]]) {
      seen_l[g.l.cls[x]] = 1;
      g.j_type[g.j.cls[x]].second++;
    }
  }
}

}  // namespace

GreenStructure green_structure(const FiniteMonoid& m) {
  const std::uint32_t n = m.size;
  std::vector<std::vector<element>> right(n), left(n), both(n);
  for (element x = 0; x < n; ++x) {
    for (auto gen : m.generators) {
      right[x].push_back(m.at(x, gen));
      left[x].push_back(m.at(gen, x));
    }
    both[x] = right[x];
    both[x].insert(both[x].end(), left[x].begin(), left[x].end());
  }
  GreenStructure g;
  g.r = sccs(n, right);
  g.l = sccs(n, left);
  g.j = sccs(n, both);
  g.h = meet(g.r, g.l);
  g.d = join(g.r, g.l);
  fill_class_data(m, g);
  return g;
}

GreenStructure green_structure_definitional(const FiniteMonoid& m) {
  const std::uint32_t n = m.size;
  std::vector<ElementSet> rows(n), cols(n), two(n);
  for (element x = 0; x < n; ++x) {
    rows[x] = row_set(m, x);
    cols[x] = col_set(m, x);
    two[x] = two_sided_set(m, x);
  }
  auto group_by = [&](const std::vector<ElementSet>& key) {
    std::vector<std::uint32_t> labels(n, UINT32_MAX);
    std::uint32_t next = 0;
    for (element x = 0; x < n; ++x) {
      if (labels[x] != UINT32_MAX) continue;
      labels[x] = next;
      for (element y = x + 1; y < n; ++y)
        if (labels[y] == UINT32_MAX && key[x] == key[y]) labels[y] = next;
      ++next;
    }
    Partition p;
    p.cls = labels;
    p.count = next;
    p.canonicalize();
    return p;
  };
  GreenStructure g;
  g.r = group_by(rows);
  g.l = group_by(cols);
  g.j = group_by(two);
  g.h = meet(g.r, g.l);
  g.d = join(g.r, g.l);
  fill_class_data(m, g);
  return g;
}

bool idempotent_l_test(const FiniteMonoid& m, element e, element f) {
  m.check_element(e);
  m.check_element(f);
  if (!m.is_idempotent(e)) raise(errc::not_idempotent, "first argument " + std::to_string(e));
  if (!m.is_idempotent(f)) raise(errc::not_idempotent, "second argument " + std::to_string(f));
  return m.at(e, f) == e && m.at(f, e) == f;
}

std::vector<MaximalSubgroup> maximal_subgroups(const FiniteMonoid& m, const GreenStructure& g) {
  auto classes = g.h.classes();
  std::vector<MaximalSubgroup> out;
  for (auto& h : classes) {
    element idem = UINT32_MAX;
    for (auto x : h)
      if (m.is_idempotent(x)) {
        idem = x;
        break;
      }
    if (idem == UINT32_MAX) continue;
    // a group H-class is closed and every element is invertible around idem
    std::vector<char> in(m.size, 0);
    for (auto x : h) in[x] = 1;
    for (auto x : h)
      for (auto y : h)
        if (!in[m.at(x, y)]) raise(errc::internal_error, "maximal subgroup candidate not closed");
    for (auto x : h) {
      bool inv = false;
      for (auto y : h) inv = inv || (m.at(x, y) == idem && m.at(y, x) == idem);
      if (!inv) raise(errc::internal_error, "maximal subgroup candidate not a group");
    }
    out.push_back({h, idem});
  }
  return out;
}

std::vector<MaximalSubgroup> maximal_subgroups(const FiniteMonoid& m) {
  auto g = green_structure(m);
  return maximal_subgroups(m, g);
}

}  // namespace monoidkit
