#include <doctest.h>

#include <numeric>

#include "isoprod/group_spec.hpp"
#include "isoprod/surface.hpp"
#include "oracles.hpp"

using namespace isoprod;

namespace {

GeneratingVector v1(const GroupPtr& g, Element a, Element b, std::vector<Element> c) {
  return GeneratingVector{g, 1, {a}, {b}, std::move(c)};
}

std::int64_t sum(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

TEST_CASE("Klein four-group surface") {
  auto v4 = build_group("ab:2,2");
  const Element a = 1, b = 2;
  auto s = build_surface(v1(v4, a, b, {a, a}), v1(v4, a, b, {b, b}));
  const auto& inv = s.invariants;
  CHECK(s.cover_C.genus == 3);
  CHECK(s.cover_D.genus == 3);
  CHECK(inv.q == 2);
  CHECK(inv.chi == 1);
  CHECK(inv.pg == 2);
  CHECK(inv.K2 == 8);
  CHECK(inv.euler == 4);
  CHECK(inv.b1 == 4);
  CHECK(inv.b2 == 10);
  CHECK(inv.b2 == 4 * inv.chi - 2 + 4 * inv.q);
  CHECK(inv.b2 == inv.euler - 2 + 2 * inv.b1);

  // summands: trivial 4, the character with alpha and beta outside the kernel 4, others 0
  const auto& t = *s.table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool a_out = oracle::value(*v4, t[i], a).real() < 0;
    bool b_out = oracle::value(*v4, t[i], b).real() < 0;
    std::int64_t expect = (i == 0 || (a_out && b_out)) ? 4 : 0;
    CHECK(inv.h2_summands[i] == expect);
    CHECK(inv.h2_summands[i] == s.h1_C[i] * s.h1_D[t.conjugate_index(i)] / (t[i].degree * t[i].degree));
  }
  CHECK(2 + sum(inv.h2_summands) == inv.b2);
  CHECK(h2_decomposition(s) == inv);
  CHECK(sum(s.h1_C) == 2 * s.cover_C.genus);
}

TEST_CASE("swapping the factors preserves the invariants") {
  auto v4 = build_group("ab:2,2");
  auto s = build_surface(v1(v4, 1, 2, {1, 1}), v1(v4, 1, 2, {3, 3}));
  auto w = build_surface(v1(v4, 1, 2, {3, 3}), v1(v4, 1, 2, {1, 1}));
  CHECK(s.invariants.q == w.invariants.q);
  CHECK(s.invariants.pg == w.invariants.pg);
  CHECK(s.invariants.K2 == w.invariants.K2);
  CHECK(s.invariants.b2 == w.invariants.b2);
  CHECK(s.invariants.chi == 1);
}

TEST_CASE("product of two genus two curves") {
  auto triv = build_group("ab:1");
  GeneratingVector v{triv, 2, {0, 0}, {0, 0}, {}};
  auto s = build_surface(v, v);
  CHECK(s.cover_C.genus == 2);
  CHECK(s.invariants.q == 4);
  CHECK(s.invariants.euler == 4);
  CHECK(s.invariants.b1 == 8);
  CHECK(s.invariants.b2 == 18);
  CHECK(s.invariants.h2_summands == std::vector<std::int64_t>{16});
  CHECK(s.invariants.K2 == 8 * s.invariants.chi);
}

TEST_CASE("freeness and genus preconditions") {
  auto v4 = build_group("ab:2,2");
  auto same = v1(v4, 1, 2, {1, 1});
  try {
    build_surface(same, same);
    FAIL("expected a freeness error");
  } catch (const FreenessError& e) {
    CHECK(e.witness() == 1);
    CHECK(e.exit_code() == 2);
  }
  auto sig = stabilizer_union(same);
  CHECK(freeness_witness(sig, sig) == Element{1});
  CHECK_FALSE(freeness_witness(sig, stabilizer_union(v1(v4, 1, 2, {2, 2}))).has_value());

  // genus one on one side
  auto triv = build_group("ab:1");
  GeneratingVector e{triv, 1, {0}, {0}, {}};
  GeneratingVector g2{triv, 2, {0, 0}, {0, 0}, {}};
  CHECK_THROWS_AS(build_surface(e, g2), DomainError);

  // invalid vector
  CHECK_THROWS_AS(build_surface(v1(v4, 1, 2, {1}), v1(v4, 1, 2, {2, 2})), VectorError);

  // different groups
  auto z2 = build_group("ab:2");
  CHECK_THROWS_AS(build_surface(v1(v4, 1, 2, {1, 1}), GeneratingVector{z2, 0, {}, {}, {1, 1, 1, 1, 1, 1}}),
                  DomainError);
}

TEST_CASE("invariants hold on generated surfaces") {
  // groups with a unique involution (ab:4, quat:8) admit no free pair at b = 1
  for (std::string spec : {"ab:2,2", "ab:2,4", "ab:2,2,2", "ab:6", "sym:3", "dih:4", "dih:6"}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    auto table = cached_character_table(g);
    std::vector<CoverProfile> profiles;
    for (std::uint32_t r = 0; r <= 4; ++r)
      for (const auto& c : enumerate_branch_data(g, BranchDataOptions{1, r, 8, 25, 2}))
        profiles.push_back(make_profile(c, *table));
    int built = 0;
    for (const auto& c : profiles)
      for (const auto& d : profiles) {
        if (freeness_witness(c.stabilizers, d.stabilizers)) continue;
        auto s = build_surface(c, d, table);
        const auto& inv = s.invariants;
        ++built;
        CHECK(inv.b2 == 4 * inv.chi - 2 + 4 * inv.q);
        CHECK(inv.b2 == inv.euler - 2 + 2 * inv.b1);
        CHECK(inv.K2 == 8 * inv.chi);
        CHECK(inv.euler == 4 * inv.chi);
        CHECK(inv.q == 2);
        CHECK(inv.euler * static_cast<std::int64_t>(g->order()) ==
              4 * (s.cover_C.genus - 1) * (s.cover_D.genus - 1));
        for (std::size_t i = 0; i < table->size(); ++i) {
          auto deg = static_cast<std::int64_t>((*table)[i].degree);
          CHECK(inv.h2_summands[i] * deg * deg == s.h1_C[i] * s.h1_D[table->conjugate_index(i)]);
        }
      }
    CHECK(built > 0);
  }
}

TEST_CASE("explicit families") {
  for (std::uint32_t m = 1; m <= 2; ++m)
    for (std::uint32_t n = 1; n <= 2; ++n)
      for (std::uint32_t k = 1; k <= 2; ++k)
        for (std::uint32_t l = 1; l <= 2; ++l) {
          if (m * m * n * std::max(k, l) > 8) continue;
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(l);
          const std::int64_t u = m * m * n;
          auto ex = explicit_family_construct(ExplicitFamily::z2m_z2mn, m, n, k, l);
          const auto& s = ex.surface;
          CHECK(s.cover_C.genus == 2 * u * k + 1);
          CHECK(s.cover_D.genus == 2 * u * l + 1);
          CHECK(s.invariants.q == 2);
          CHECK(s.invariants.pg == u * k * l + 1);
          CHECK(s.invariants.K2 == 8 * u * k * l);
          CHECK(s.group->element_order(ex.gamma) == 2);
          CHECK(s.group->element_order(ex.gamma_prime) == 2);
          CHECK(ex.gamma != ex.gamma_prime);

          auto two = explicit_family_construct(ExplicitFamily::z2_z2m_z2mn, m, n, k, l);
          const auto& t = two.surface;
          CHECK(t.group->order() == static_cast<std::size_t>(8 * u));
          // Riemann-Hurwitz: 2g - 2 = 8u * 2k * (1/2)
          CHECK(t.cover_C.genus == 4 * u * k + 1);
          CHECK(t.cover_D.genus == 4 * u * l + 1);
          CHECK(t.invariants.q == 2);
          CHECK(t.invariants.pg == 2 * u * k * l + 1);
          CHECK(t.invariants.K2 == 16 * u * k * l);
        }
  CHECK(explicit_family_group_spec(ExplicitFamily::z2m_z2mn, 2, 3) == "ab:4,12");
  CHECK(explicit_family_group_spec(ExplicitFamily::z2_z2m_z2mn, 1, 1) == "ab:2,2,2");
  CHECK_THROWS_AS(explicit_family_construct(ExplicitFamily::z2m_z2mn, 6, 6, 1, 1), SizeError);
  CHECK_THROWS_AS(explicit_family_construct(ExplicitFamily::z2m_z2mn, 0, 1, 1, 1), DomainError);
}
