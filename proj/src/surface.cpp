#include "isoprod/surface.hpp"

#include "isoprod/group_spec.hpp"

namespace isoprod {

CoverProfile make_profile(const BranchedCover& cover, const CharacterTable& table) {
  return CoverProfile{cover, stabilizer_union(cover.vector), isotypic_dimensions(cover, table)};
}

std::optional<Element> freeness_witness(const ElementSet& sigma1, const ElementSet& sigma2) {
  ElementSet both = sigma1 & sigma2;
  both.erase(GroupTable::identity());
  if (both.empty()) return std::nullopt;
  return both.first();
}

SurfaceInvariants surface_invariants(const CharacterTable& table, const CoverProfile& c, const CoverProfile& d) {
  const auto n = static_cast<std::int64_t>(table.group().order());
  SurfaceInvariants inv;
  inv.q = static_cast<std::int64_t>(c.cover.vector.base_genus + d.cover.vector.base_genus);
  std::int64_t num = (c.cover.genus - 1) * (d.cover.genus - 1);
  if (num % n != 0)
    throw ConsistencyError("(g(C)-1)(g(D)-1) = " + std::to_string(num) + " is not divisible by |G| = " +
                           std::to_string(n));
  inv.chi = num / n;
  inv.pg = inv.chi + inv.q - 1;
  inv.K2 = 8 * inv.chi;
  inv.euler = 4 * inv.chi;
  inv.b1 = 2 * inv.q;

  inv.h2_summands.assign(table.size(), 0);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto deg = static_cast<std::int64_t>(table[i].degree);
    std::int64_t p = c.dims[i] * d.dims[table.conjugate_index(i)];
    if (p % (deg * deg) != 0)
      throw ConsistencyError("H^2 summand for character " + std::to_string(i) + " is not integral");
    inv.h2_summands[i] = p / (deg * deg);
    sum += inv.h2_summands[i];
  }
  inv.b2 = 2 + sum;
  if (inv.b2 != inv.euler - 2 + 2 * inv.b1)
    throw ConsistencyError("b2 from the H^2 decomposition (" + std::to_string(inv.b2) +
                           ") differs from e - 2 + 2 b1 (" + std::to_string(inv.euler - 2 + 2 * inv.b1) + ")");
  return inv;
}

namespace {

void require_same_group(const GeneratingVector& a, const GeneratingVector& b) {
  if (!a.group || !b.group) return;
  if (a.group != b.group && (a.group->table_hash() != b.group->table_hash() || a.group->spec() != b.group->spec()))
    throw DomainError("the two generating vectors belong to different groups");
}

}  // namespace

UnmixedSurface build_surface(const CoverProfile& c, const CoverProfile& d, const TablePtr& table) {
  const auto& vc = c.cover.vector;
  const auto& vd = d.cover.vector;
  require_same_group(vc, vd);
  if (c.cover.genus < 2 || d.cover.genus < 2)
    throw DomainError("both curves need genus at least 2 (got " + std::to_string(c.cover.genus) + " and " +
                      std::to_string(d.cover.genus) + ")");
  if (auto w = freeness_witness(c.stabilizers, d.stabilizers))
    throw FreenessError(*w, "diagonal action is not free: " + vc.group->label(*w) + " fixes points on both curves");
  UnmixedSurface s{vc.group, table, c.cover, d.cover, c.dims, d.dims, {}};
  s.invariants = surface_invariants(*table, c, d);
  return s;
}

UnmixedSurface build_surface(const GeneratingVector& vC, const GeneratingVector& vD) {
  auto cc = validate_vector(vC);
  auto cd = validate_vector(vD);
  require_same_group(vC, vD);
  auto table = cached_character_table(vC.group);
  return build_surface(make_profile(cc, *table), make_profile(cd, *table), table);
}

SurfaceInvariants h2_decomposition(const UnmixedSurface& s) {
  CoverProfile c{s.cover_C, stabilizer_union(s.cover_C.vector), isotypic_dimensions(s.cover_C, *s.table)};
  CoverProfile d{s.cover_D, stabilizer_union(s.cover_D.vector), isotypic_dimensions(s.cover_D, *s.table)};
  return surface_invariants(*s.table, c, d);
}

std::string explicit_family_group_spec(ExplicitFamily family, std::uint32_t m, std::uint32_t n) {
  const std::string a = std::to_string(2 * m), b = std::to_string(2 * m * n);
  return family == ExplicitFamily::z2m_z2mn ? "ab:" + a + "," + b : "ab:2," + a + "," + b;
}

FamilySurface explicit_family_construct(ExplicitFamily family, std::uint32_t m, std::uint32_t n, std::uint32_t k,
                              std::uint32_t l, std::size_t order_cap) {
  if (m == 0 || n == 0 || k == 0 || l == 0) throw DomainError("example parameters must be positive");
  auto group = build_group(explicit_family_group_spec(family, m, n), BuildOptions{order_cap});
  const GroupTable& g = *group;
  // elements are mixed-radix indices with the first factor fastest
  Element alpha, beta, gamma, gamma_prime;
  if (family == ExplicitFamily::z2m_z2mn) {
    alpha = 1;
    beta = 2 * m;
    gamma = g.pow(alpha, m);
    gamma_prime = g.pow(beta, static_cast<std::int64_t>(m) * n);
  } else {
    Element lambda = 1;
    alpha = 2;             // mu
    beta = 2 * 2 * m;      // nu
    gamma = lambda;
    gamma_prime = g.mul(lambda, g.pow(alpha, m));
  }
  auto gc = cyclic_subgroup(g, gamma), gd = cyclic_subgroup(g, gamma_prime);
  if ((gc & gd).size() != 1) throw ConsistencyError("branch elements generate intersecting subgroups");

  GeneratingVector vc{group, 1, {alpha}, {beta}, std::vector<Element>(2 * k, gamma)};
  GeneratingVector vd{group, 1, {alpha}, {beta}, std::vector<Element>(2 * l, gamma_prime)};
  return FamilySurface{build_surface(vc, vd), gamma, gamma_prime};
}

}  // namespace isoprod
