#include "monoidkit/constructions.hpp"

#include <algorithm>

#include "monoidkit/congruence.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/kernels.hpp"

namespace monoidkit {

namespace {

void check_spec(const ReesSpec& spec) {
  if (!spec.group.is_group()) raise(errc::not_a_group, "Rees matrix structure monoid");
  if (spec.icount == 0 || spec.jcount == 0) raise(errc::invalid_parameter, "empty index set");
  if (spec.entries.size() != std::size_t(spec.icount) * spec.jcount)
    raise(errc::invalid_parameter, "matrix entry count");
  for (auto e : spec.entries) spec.group.check_element(e);
}

}  // namespace

SemigroupTable rees_semigroup(const ReesSpec& spec) {
  check_spec(spec);
  const std::uint64_t sz = std::uint64_t(spec.icount) * spec.group.size * spec.jcount;
  if (sz + 1 > element_cap()) raise(errc::size_overflow, "Rees semigroup order " + std::to_string(sz));
  SemigroupTable s;
  s.size = static_cast<std::uint32_t>(sz);
  auto idx = [&](std::uint32_t i, element g, std::uint32_t j) {
    return (i * spec.group.size + g) * spec.jcount + j;
  };
  s.table.resize(std::size_t(s.size) * s.size);
  for (std::uint32_t i = 0; i < spec.icount; ++i)
    for (element g = 0; g < spec.group.size; ++g)
      for (std::uint32_t j = 0; j < spec.jcount; ++j)
        for (std::uint32_t k = 0; k < spec.icount; ++k)
          for (element h = 0; h < spec.group.size; ++h)
            for (std::uint32_t l = 0; l < spec.jcount; ++l)
              s.table[std::size_t(idx(i, g, j)) * s.size + idx(k, h, l)] =
                  idx(i, spec.group.at(spec.group.at(g, spec.p(j, k)), h), l);
  s.names.reserve(s.size);
  for (std::uint32_t i = 0; i < spec.icount; ++i)
    for (element g = 0; g < spec.group.size; ++g)
      for (std::uint32_t j = 0; j < spec.jcount; ++j)
        s.names.push_back("(" + std::to_string(i) + "," + spec.group.name_of(g) + "," + std::to_string(j) + ")");
  if (auto bad = kernels::associativity_violation(s.table.data(), s.size))
    raise(errc::internal_error, "Rees product not associative");
  return s;
}

FiniteMonoid rees_matrix(const ReesSpec& spec, bool adjoin_id) {
  SemigroupTable s = rees_semigroup(spec);
  if (adjoin_id) return adjoin_identity(s);
  auto ident = s.find_identity();
  if (!ident) raise(errc::invalid_parameter, "Rees semigroup has no identity; use adjoin_identity");
  FiniteMonoid m;
  m.size = s.size;
  m.table = s.table;
  m.identity = *ident;
  for (element x = 0; x < m.size; ++x) m.generators.push_back(x);
  m.names = s.names;
  return build_monoid(std::move(m));
}

RankReport matrix_rank(const ReesSpec& spec, const std::optional<ElementSet>& normal) {
  check_spec(spec);
  const auto& g = spec.group;
  std::vector<std::uint32_t> coset(g.size);
  if (normal) {
    ElementSet n = normalized_set(*normal);
    if (!is_normal_subgroup(g, n)) raise(errc::not_normal, "matrix_rank modulus");
    // label each element by the minimal member of its coset gN
    for (element x = 0; x < g.size; ++x) {
      element least = x;
      for (auto v : n) least = std::min(least, g.at(x, v));
      coset[x] = least;
    }
  } else {
    for (element x = 0; x < g.size; ++x) coset[x] = x;
  }
  auto entry = [&](std::uint32_t j, std::uint32_t i) { return coset[spec.p(j, i)]; };

  // i ~I k iff some g has p_{ji} = p_{jk} g for all j; try every g
  auto cols_related = [&](std::uint32_t i, std::uint32_t k) {
    for (element cand = 0; cand < g.size; ++cand) {
      bool ok = true;
      for (std::uint32_t j = 0; j < spec.jcount && ok; ++j)
        ok = entry(j, i) == coset[g.at(spec.p(j, k), cand)];
      if (ok) return true;
    }
    return false;
  };
  auto rows_related = [&](std::uint32_t j, std::uint32_t l) {
    for (element cand = 0; cand < g.size; ++cand) {
      bool ok = true;
      for (std::uint32_t i = 0; i < spec.icount && ok; ++i)
        ok = entry(j, i) == coset[g.at(cand, spec.p(l, i))];
      if (ok) return true;
    }
    return false;
  };

  auto classify = [](std::uint32_t n, auto related) {
    std::vector<std::uint32_t> labels(n, UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (labels[a] != UINT32_MAX) continue;
      labels[a] = next;
      for (std::uint32_t b = a + 1; b < n; ++b)
        if (labels[b] == UINT32_MAX && related(a, b)) labels[b] = next;
      ++next;
    }
    return Partition::from_labels(labels);
  };

  RankReport r;
  r.cols = classify(spec.icount, cols_related);
  r.rows = classify(spec.jcount, rows_related);
  r.r_i = r.cols.count;
  r.r_j = r.rows.count;
  r.rank = std::max(r.r_i, r.r_j);
  if (normal) r.modulus = normalized_set(*normal);
  return r;
}

std::vector<std::pair<ElementSet, std::uint32_t>> golubov_profile(const ReesSpec& spec) {
  check_spec(spec);
  std::vector<std::pair<ElementSet, std::uint32_t>> out;
  for (auto& n : normal_subgroups_of(spec.group))
    out.emplace_back(n, matrix_rank(spec, n).rank);
  return out;
}

ReesSpec diagonal_matrix(std::uint32_t n) {
  if (n < 1) raise(errc::invalid_parameter, "diagonal_matrix needs n >= 1");
  ReesSpec spec;
  spec.group = cyclic_group(2);
  spec.icount = spec.jcount = n;
  spec.entries.assign(std::size_t(n) * n, 0);  // e off the diagonal
  for (std::uint32_t i = 0; i < n; ++i) spec.entries[std::size_t(i) * n + i] = 1;  // a on it
  return spec;
}

MgnLayout mgn_layout(const FiniteMonoid& group, const ElementSet& normal) {
  MgnLayout lay;
  lay.group_order = group.size;
  lay.normal_order = static_cast<std::uint32_t>(normalized_set(normal).size());
  return lay;
}

element MgnLayout::h() const { return 1 + group_order + normal_order; }

FiniteMonoid mgn(const FiniteMonoid& group, const ElementSet& normal_raw) {
  ElementSet normal = normalized_set(normal_raw);
  if (!group.is_group()) raise(errc::not_a_group, "mgn structure monoid");
  if (!is_normal_subgroup(group, normal)) raise(errc::not_normal, "mgn subgroup");
  MgnLayout lay = mgn_layout(group, normal);
  const std::uint32_t nG = group.size, nN = static_cast<std::uint32_t>(normal.size());
  const std::uint32_t size = 2 * nG + nN + 2;
  if (size > element_cap()) raise(errc::size_overflow, "mgn order");

  std::vector<std::uint32_t> npos(group.size, UINT32_MAX);
  for (std::uint32_t p = 0; p < nN; ++p) npos[normal[p]] = p;

  FiniteMonoid m;
  m.size = size;
  const element zero = lay.zero();
  m.table.assign(std::size_t(size) * size, zero);
  auto set = [&](element x, element y, element v) { m.table[std::size_t(x) * size + y] = v; };
  for (element x = 0; x < size; ++x) {
    set(0, x, x);
    set(x, 0, x);
    set(zero, x, zero);
    set(x, zero, zero);
  }
  for (element a = 0; a < nG; ++a)
    for (element b = 0; b < nG; ++b) {
      set(lay.g(a), lay.g(b), lay.g(group.at(a, b)));   // inside G
      set(lay.d(a), lay.g(b), lay.d(group.at(a, b)));   // hg * g' = h(gg')
    }
  for (std::uint32_t p = 0; p < nN; ++p) {
    for (std::uint32_t q = 0; q < nN; ++q)
      set(lay.nbar(p), lay.nbar(q), lay.nbar(npos[group.at(normal[p], normal[q])]));
    for (element b = 0; b < nG; ++b)
      set(lay.nbar(p), lay.d(b), lay.d(group.at(normal[p], b)));  // nbar*hg = h(ng)
  }
  // all remaining non-unit products (G*Nbar, Nbar*G, G*D, D*Nbar, D*D) are 0

  m.identity = 0;
  m.zero = zero;
  for (element a = 0; a < nG; ++a) m.generators.push_back(lay.g(a));
  for (std::uint32_t p = 0; p < nN; ++p) m.generators.push_back(lay.nbar(p));
  m.generators.push_back(lay.h());
  m.names.push_back("1");
  for (element a = 0; a < nG; ++a) m.names.push_back(group.name_of(a));
  for (std::uint32_t p = 0; p < nN; ++p) m.names.push_back("~" + group.name_of(normal[p]));
  for (element a = 0; a < nG; ++a)
    m.names.push_back(a == group.identity ? "h" : "h" + group.name_of(a));
  m.names.push_back("0");
  // build_monoid re-verifies associativity, guarding the case analysis
  return build_monoid(std::move(m));
}

std::pair<FiniteMonoid, Homomorphism> quotient_group(const FiniteMonoid& group, const ElementSet& k_raw) {
  ElementSet k = normalized_set(k_raw);
  if (!is_normal_subgroup(group, k)) raise(errc::not_normal, "quotient_group");
  std::vector<std::uint32_t> labels(group.size);
  for (element x = 0; x < group.size; ++x) {
    element least = x;
    for (auto v : k) least = std::min(least, group.at(x, v));
    labels[x] = least;
  }
  Congruence c{Partition::from_labels(labels), Side::two_sided, false};
  if (congruence_violation(group, c.partition, Side::two_sided))
    raise(errc::internal_error, "coset partition not a congruence");
  c.verified = true;
  return quotient_by(group, c);
}

MgnQuotientResult mgn_quotient(const FiniteMonoid& group, const ElementSet& normal_raw,
                               const ElementSet& k_raw) {
  ElementSet normal = normalized_set(normal_raw);
  ElementSet k = normalized_set(k_raw);
  if (!is_normal_subgroup(group, k)) raise(errc::not_normal, "mgn_quotient K");
  FiniteMonoid m = mgn(group, normal);
  MgnLayout lay = mgn_layout(group, normal);

  // congruence generated by (k, e_G) for k in K and (nbar, ebar) for n in K n N
  std::vector<std::pair<element, element>> pairs;
  for (auto x : k) pairs.emplace_back(lay.g(x), lay.g(group.identity));
  std::vector<std::uint32_t> npos(group.size, UINT32_MAX);
  for (std::uint32_t p = 0; p < normal.size(); ++p) npos[normal[p]] = p;
  for (auto x : k)
    if (npos[x] != UINT32_MAX) pairs.emplace_back(lay.nbar(npos[x]), lay.nbar(npos[group.identity]));
  Congruence c = principal_congruence(m, pairs, Side::two_sided);
  auto [q, proj] = quotient_by(m, c);

  // independent construction: mgn(G/K, NK/K)
  auto [gk, gproj] = quotient_group(group, k);
  ElementSet nk;
  for (auto x : normal) nk.push_back(gproj.apply(x));
  nk = normalized_set(std::move(nk));
  FiniteMonoid rebuilt = mgn(gk, nk);

  MgnQuotientResult res{std::move(q), std::move(proj), std::move(rebuilt), false};
  res.iso_verified = monoid_iso(res.q, res.rebuilt).has_value();
  return res;
}

}  // namespace monoidkit
