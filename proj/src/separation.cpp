#include "monoidkit/separation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monoidkit {

const char* route_name(SepRoute r) {
  switch (r) {
    case SepRoute::not_l: return "not-L";
    case SepRoute::not_r: return "not-R";
    case SepRoute::same_h: return "same-H";
  }
  return "?";
}

SeparationWitness separate(const FiniteMonoid& m, element x, element y, SeparateOptions opts) {
  m.check_element(x);
  m.check_element(y);
  if (x == y) raise(errc::equal_elements, "separate(" + std::to_string(x) + "," + std::to_string(x) + ")");

  auto green = green_structure(m);
  SeparationWitness w;
  w.x = x;
  w.y = y;

  if (green.l.cls[x] != green.l.cls[y]) {
    // L is a finite-index right congruence separating them; return the
    // largest two-sided congruence inside it
    w.route = SepRoute::not_l;
    w.congruence = largest_contained(m, green.l, Side::two_sided);
  } else if (green.r.cls[x] != green.r.cls[y]) {
    w.route = SepRoute::not_r;
    w.congruence = largest_contained(m, green.r, Side::two_sided);
  } else {
    w.route = SepRoute::same_h;
    ElementSet h;
    for (element z = 0; z < m.size; ++z)
      if (green.h.cls[z] == green.h.cls[x]) h.push_back(z);
    auto sg = schutzenberger_group(m, green, h);
    w.h_class = sg.h_class;
    w.base_h = sg.base_point;

    // s_x, s_y in Stab(H) with h*s_x = x, h*s_y = y (minimal such)
    w.s_x = w.s_y = m.size;
    for (auto s : sg.stabilizer) {
      if (w.s_x == m.size && m.at(w.base_h, s) == x) w.s_x = s;
      if (w.s_y == m.size && m.at(w.base_h, s) == y) w.s_y = s;
    }
    if (w.s_x == m.size || w.s_y == m.size)
      raise(errc::internal_error, "h*Stab(H) misses an element of H");

    auto stab_pos = [&](element s) {
      return static_cast<std::uint32_t>(
          std::lower_bound(sg.stabilizer.begin(), sg.stabilizer.end(), s) - sg.stabilizer.begin());
    };
    std::uint32_t gx = sg.class_to_perm[sg.sigma.cls[stab_pos(w.s_x)]];
    std::uint32_t gy = sg.class_to_perm[sg.sigma.cls[stab_pos(w.s_y)]];

    // choose N: trivial unless a larger normal subgroup still separates the
    // sigma classes of s_x and s_y
    std::vector<std::uint32_t> chosen = {sg.group.identity_index};
    if (opts.largest_valid_normal) {
      auto candidates = normal_subgroups(sg.group);
      for (const auto& nn : candidates) {
        std::vector<char> in(sg.group.order(), 0);
        for (auto v : nn) in[v] = 1;
        // same coset iff gx*gy^{-1} lies in N
        bool separates = !in[sg.group.mul(gx, sg.group.inverse(gy))];
        if (separates && nn.size() > chosen.size()) chosen = nn;
      }
    }
    w.chosen_n = chosen;

    // cosets N_i of N in Gamma(H), N_0 = N; blocks C_i = h * N_i
    std::vector<std::uint32_t> coset_of(sg.group.order(), UINT32_MAX);
    std::vector<std::vector<std::uint32_t>> cosets;
    for (std::uint32_t g = 0; g < sg.group.order(); ++g) {
      std::uint32_t seed = g == 0 ? sg.group.identity_index : g;
      if (coset_of[seed] != UINT32_MAX) continue;
      std::vector<std::uint32_t> coset;
      for (auto nelt : chosen) coset.push_back(sg.group.mul(nelt, seed));
      std::sort(coset.begin(), coset.end());
      for (auto v : coset) coset_of[v] = static_cast<std::uint32_t>(cosets.size());
      cosets.push_back(std::move(coset));
    }
    const std::uint32_t base_pos = static_cast<std::uint32_t>(
        std::lower_bound(w.h_class.begin(), w.h_class.end(), w.base_h) - w.h_class.begin());
    for (auto& coset : cosets) {
      ElementSet block;
      for (auto g : coset) block.push_back(w.h_class[sg.group.perms[g][base_pos]]);
      w.blocks.push_back(normalized_set(std::move(block)));
    }

    // pi: the blocks, plus everything outside H as one class
    std::vector<std::uint32_t> labels(m.size, static_cast<std::uint32_t>(w.blocks.size()));
    for (std::uint32_t b = 0; b < w.blocks.size(); ++b)
      for (auto e : w.blocks[b]) labels[e] = b;
    w.pi = Partition::from_labels(labels);

    Congruence sr = largest_contained(m, w.pi, Side::right);
    w.congruence = largest_contained(m, sr.partition, Side::two_sided);

    // diagnostic: the finitely-many-Q_M(s, C_k)-sets claim, counted
    std::set<ElementSet> qsets;
    for (element s = 0; s < m.size; ++s)
      for (const auto& block : w.blocks) qsets.insert(q_set(m, s, block));
    w.q_set_count = qsets.size();
  }

  if (w.congruence.partition.same(x, y))
    raise(errc::internal_error, "separation congruence failed to separate");
  if (!w.congruence.verified || w.congruence.side != Side::two_sided)
    raise(errc::internal_error, "separation congruence not verified two-sided");
  return w;
}

namespace {

std::vector<std::uint32_t> reachable(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t from) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::uint32_t> stack = {from}, out;
  seen[from] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::pair<Congruence, RLMData> right_letter_congruence(const FiniteMonoid& m, element a, element b) {
  m.check_element(a);
  m.check_element(b);
  auto reg = regularity_report(m);
  if (!reg.regular) raise(errc::not_regular, "right_letter_congruence needs a regular monoid");
  auto green = green_structure(m);
  if (green.l.cls[a] == green.l.cls[b]) raise(errc::l_related_pair, "arguments are L-related");

  const std::uint32_t nl = green.l.count;
  // action of M on L-classes, and its generator graph
  std::vector<element> rep(nl, UINT32_MAX);
  for (element z = 0; z < m.size; ++z)
    if (rep[green.l.cls[z]] == UINT32_MAX) rep[green.l.cls[z]] = z;
  std::vector<std::uint32_t> act(std::size_t(nl) * m.size);
  for (std::uint32_t c = 0; c < nl; ++c)
    for (element s = 0; s < m.size; ++s) {
      std::uint32_t img = green.l.cls[m.at(rep[c], s)];
      act[std::size_t(c) * m.size + s] = img;
    }
  // well-definedness: all members of a class agree
  for (element z = 0; z < m.size; ++z)
    for (auto g : m.generators)
      if (act[std::size_t(green.l.cls[z]) * m.size + g] != green.l.cls[m.at(z, g)])
        raise(errc::internal_error, "action on L-classes ill-defined");

  std::vector<std::vector<std::uint32_t>> adj(nl);
  for (std::uint32_t c = 0; c < nl; ++c)
    for (auto g : m.generators) adj[c].push_back(act[std::size_t(c) * m.size + g]);

  RLMData data;
  data.a = a;
  data.b = b;
  data.cone_a = reachable(adj, green.l.cls[a]);
  data.cone_b = reachable(adj, green.l.cls[b]);
  auto orbit_of = [&](std::uint32_t from, const std::vector<std::uint32_t>& cone) {
    std::vector<std::uint32_t> orbit;
    for (auto c : cone) {
      auto back = reachable(adj, c);
      if (std::binary_search(back.begin(), back.end(), from)) orbit.push_back(c);
    }
    return orbit;  // sorted
  };
  data.orbit_a = orbit_of(green.l.cls[a], data.cone_a);
  data.orbit_b = orbit_of(green.l.cls[b], data.cone_b);

  // alpha_s / beta_s on orbit points, with point 0 the absorbing sink
  auto truncated_maps = [&](const std::vector<std::uint32_t>& orbit) {
    std::vector<std::uint32_t> point(nl, 0);
    for (std::uint32_t i = 0; i < orbit.size(); ++i) point[orbit[i]] = i + 1;
    std::vector<std::vector<std::uint32_t>> maps(m.size);
    for (element s = 0; s < m.size; ++s) {
      auto& f = maps[s];
      f.assign(orbit.size() + 1, 0);
      for (std::uint32_t i = 0; i < orbit.size(); ++i)
        f[i + 1] = point[act[std::size_t(orbit[i]) * m.size + s]];  // 0 = left the orbit
    }
    return maps;
  };
  data.alpha = truncated_maps(data.orbit_a);
  data.beta = truncated_maps(data.orbit_b);

  // A(s) = { alpha_{us} : u in M }, canonicalized as sorted map-id sets
  auto map_sets = [&](const std::vector<std::vector<std::uint32_t>>& maps,
                      std::vector<std::vector<std::uint32_t>>& registry) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    auto id_of = [&](const std::vector<std::uint32_t>& f) {
      auto [it, fresh] = ids.try_emplace(f, static_cast<std::uint32_t>(ids.size()));
      if (fresh) registry.push_back(f);
      return it->second;
    };
    std::vector<std::vector<std::uint32_t>> sets(m.size);
    for (element s = 0; s < m.size; ++s) {
      std::set<std::uint32_t> acc;
      for (element u = 0; u < m.size; ++u) acc.insert(id_of(maps[m.at(u, s)]));
      sets[s].assign(acc.begin(), acc.end());
    }
    return sets;
  };
  data.alpha_set = map_sets(data.alpha, data.alpha_maps);
  data.beta_set = map_sets(data.beta, data.beta_maps);

  std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, std::uint32_t> fp;
  std::vector<std::uint32_t> labels(m.size);
  for (element s = 0; s < m.size; ++s)
    labels[s] = fp.try_emplace({data.alpha_set[s], data.beta_set[s]}, fp.size()).first->second;
  Congruence rho{Partition::from_labels(labels), Side::right, false};

  // the three proof obligations, each checked separately
  if (congruence_violation(m, rho.partition, Side::right))
    raise(errc::internal_error, "right letter mapping relation not a right congruence");
  if (!green.l.refines(rho.partition))
    raise(errc::internal_error, "right letter mapping relation does not contain L");
  if (rho.partition.same(a, b))
    raise(errc::internal_error, "right letter mapping relation failed to separate");
  rho.verified = true;
  return {std::move(rho), std::move(data)};
}

Partition l_preimage_congruence(const Homomorphism& phi) {
  auto green_target = green_structure(phi.target);
  std::vector<std::uint32_t> labels(phi.source.size);
  for (element x = 0; x < phi.source.size; ++x) labels[x] = green_target.l.cls[phi.apply(x)];
  Partition rho = Partition::from_labels(labels);
  if (congruence_violation(phi.source, rho, Side::right))
    raise(errc::internal_error, "L pre-image not a right congruence");
  auto green_source = green_structure(phi.source);
  if (!green_source.l.refines(rho)) raise(errc::internal_error, "L pre-image does not contain L");
  return rho;
}

}  // namespace monoidkit
