#include <doctest.h>

#include <map>
#include <numeric>

#include "isoprod/group_spec.hpp"
#include "oracles.hpp"

using namespace isoprod;

namespace {

GeneratingVector vec(const GroupPtr& g, std::vector<Element> a, std::vector<Element> b, std::vector<Element> c) {
  return GeneratingVector{g, static_cast<std::uint32_t>(a.size()), std::move(a), std::move(b), std::move(c)};
}

VectorDefect defect_of(const GeneratingVector& v) {
  try {
    validate_vector(v);
  } catch (const VectorError& e) {
    return e.defect();
  }
  FAIL("vector was accepted");
  return VectorDefect::malformed;
}

}  // namespace

// In ab:2,2 the element indices are (0,0)=0, (1,0)=1, (0,1)=2, (1,1)=3.
TEST_CASE("validate_vector") {
  auto v4 = build_group("ab:2,2");
  const Element a = 1, b = 2;
  CHECK(validate_vector(vec(v4, {a}, {b}, {a, a})).genus == 3);

  auto z5 = build_group("ab:5");
  auto unramified = validate_vector(GeneratingVector{z5, 2, {1, 0}, {0, 1}, {}});
  CHECK(unramified.genus == 6);

  auto z2 = build_group("ab:2");
  CHECK(validate_vector(GeneratingVector{z2, 0, {}, {}, {1, 1, 1, 1}}).genus == 1);

  CHECK(defect_of(vec(v4, {a}, {b}, {a})) == VectorDefect::relation);
  CHECK(defect_of(vec(v4, {a}, {0}, {a, a})) == VectorDefect::not_generating);
  CHECK(defect_of(vec(v4, {a}, {b}, {0, a, a})) == VectorDefect::trivial_branch);
  CHECK(defect_of(vec(v4, {a}, {b}, {7})) == VectorDefect::out_of_range);
  CHECK(defect_of(GeneratingVector{v4, 1, {a}, {}, {}}) == VectorDefect::malformed);
  CHECK(hurwitz_genus(4, 0, {2, 2, 2}) == 0);
  CHECK(hurwitz_genus(6, 0, {2, 2}) == std::nullopt);
  CHECK(hurwitz_genus(4, 0, {3}) == std::nullopt);
}

TEST_CASE("Riemann-Hurwitz agrees with the rational formula") {
  for (std::size_t n : {1u, 2u, 4u, 6u, 8u, 12u, 16u})
    for (unsigned b = 0; b <= 2; ++b)
      for (unsigned m1 : {2u, 3u, 4u})
        for (unsigned m2 : {2u, 3u, 4u, 6u}) {
          std::vector<unsigned> orders{m1, m2};
          auto lib = hurwitz_genus(n, b, {m1, m2});
          long ref = oracle::hurwitz(n, b, orders);
          if (ref < 0)
            CHECK_FALSE(lib.has_value());
          else
            CHECK(lib.value_or(-100) == ref);
        }
}

TEST_CASE("stabilizer unions") {
  auto v4 = build_group("ab:2,2");
  CHECK(oracle::as_set(stabilizer_union(vec(v4, {1}, {2}, {}))) == std::set<Element>{0});
  CHECK(oracle::as_set(stabilizer_union(vec(v4, {1}, {2}, {1, 1}))) == std::set<Element>{0, 1});
  auto s3 = build_group("sym:3");
  const Element t = *s3->find_label("(1 2)");
  auto sigma = stabilizer_union(vec(s3, {0}, {0}, {t}));
  CHECK(sigma.size() == 4);
  for (Element x : sigma.elements()) CHECK((x == 0 || s3->element_order(x) == 2));
}

TEST_CASE("Broughton dimensions for the Klein four-group cover") {
  auto v4 = build_group("ab:2,2");
  auto table = cached_character_table(v4);
  const Element a = 1, b = 2;
  auto cover = validate_vector(vec(v4, {a}, {b}, {a, a}));
  CHECK(broughton_dimension(cover, *table, 0) == 2);
  for (std::size_t i = 1; i < table->size(); ++i) {
    const auto& chi = (*table)[i];
    bool alpha_in_kernel = chi.values[v4->class_of(a)][0] == 1;
    bool beta_in_kernel = chi.values[v4->class_of(b)][0] == 1;
    if (!alpha_in_kernel && beta_in_kernel) CHECK(broughton_dimension(cover, *table, i) == 2);
    if (alpha_in_kernel && !beta_in_kernel) CHECK(broughton_dimension(cover, *table, i) == 0);
  }
  auto dims = isotypic_dimensions(cover, *table);
  CHECK(std::accumulate(dims.begin(), dims.end(), std::int64_t{0}) == 2 * cover.genus);
}

TEST_CASE("Broughton dimensions agree with the explicit sum formula") {
  for (const char* spec : {"ab:2,2", "ab:6", "sym:3", "dih:4", "quat:8", "alt:4", "ab:2,4"}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    auto table = cached_character_table(g);
    for (std::uint32_t b : {0u, 1u, 2u}) {
      EnumerationOptions opt;
      opt.base_genus = b;
      opt.max_r = b == 2 ? 2 : 4;
      opt.genus_cap = 40;
      opt.max_results = 400;
      enumerate_vectors(g, opt, [&](const BranchedCover& c) {
        auto dims = isotypic_dimensions(c, *table);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < table->size(); ++i) {
          CHECK(dims[i] == oracle::isotypic_dimension(*g, (*table)[i], i == 0, b, c.vector.gammas));
          CHECK(dims[i] % (*table)[i].degree == 0);
          sum += dims[i];
          if (b == 1 && i != 0) {
            bool outside = false;
            for (Element x : c.vector.gammas)
              if (!kernel(*g, (*table)[i]).contains(x)) outside = true;
            CHECK((dims[i] > 0) == outside);
          }
        }
        CHECK(sum == 2 * c.genus);
        return true;
      });
    }
  }
}

TEST_CASE("raw enumeration counts") {
  // trivial group, b = 1, r = 0: one vector of genus 1, removed by the genus filter
  EnumerationOptions opt;
  opt.base_genus = 1;
  opt.max_r = 0;
  std::uint64_t seen = 0;
  auto res = enumerate_vectors(build_group("ab:1"), opt, [&](const BranchedCover&) {
    ++seen;
    return true;
  });
  CHECK(res.count == 0);
  opt.min_genus = 0;
  res = enumerate_vectors(build_group("ab:1"), opt, [&](const BranchedCover& c) {
    CHECK(c.genus == 1);
    return true;
  });
  CHECK(res.count == 1);

  // Z2, b = 1, r = 2: gamma must be the involution, alpha and beta are free
  EnumerationOptions z2;
  z2.base_genus = 1;
  z2.branch_orders = std::vector<std::uint32_t>{2, 2};
  std::vector<std::vector<Element>> tuples;
  res = enumerate_vectors(build_group("ab:2"), z2, [&](const BranchedCover& c) {
    tuples.push_back({c.vector.alphas[0], c.vector.betas[0], c.vector.gammas[0], c.vector.gammas[1]});
    return true;
  });
  // oracle: all (a, b, g1, g2) in Z2^4 with g_i != 0, g1 g2 = 1, <a, b, g1, g2> = Z2
  std::uint64_t expected = 0;
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b)
      for (Element g1 = 1; g1 < 2; ++g1)
        for (Element g2 = 1; g2 < 2; ++g2) expected += (g1 ^ g2) == 0;
  CHECK(expected == 4);
  CHECK(res.count == expected);
  CHECK(std::is_sorted(tuples.begin(), tuples.end()));
}

TEST_CASE("enumeration against a brute-force oracle") {
  for (const char* spec : {"ab:2,2", "sym:3", "ab:4"}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    const std::size_t n = g->order();
    EnumerationOptions opt;
    opt.base_genus = 1;
    opt.max_r = 3;
    opt.genus_cap = 30;
    std::set<std::vector<Element>> lib;
    enumerate_vectors(g, opt, [&](const BranchedCover& c) {
      std::vector<Element> t{c.vector.alphas[0], c.vector.betas[0]};
      t.insert(t.end(), c.vector.gammas.begin(), c.vector.gammas.end());
      CHECK(lib.insert(t).second);
      return true;
    });
    std::set<std::vector<Element>> ref;
    for (unsigned r = 0; r <= 3; ++r) {
      std::vector<Element> t(2 + r, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == t.size()) {
          Element p = g->mul(g->mul(t[0], t[1]), g->mul(oracle::inv(*g, t[0]), oracle::inv(*g, t[1])));
          std::vector<unsigned> orders;
          for (unsigned i = 0; i < r; ++i) {
            if (t[2 + i] == 0) return;
            p = g->mul(p, t[2 + i]);
            orders.push_back(g->element_order(t[2 + i]));
          }
          if (p != 0) return;
          if (oracle::closure(*g, {t.begin(), t.end()}).size() != n) return;
          long genus = oracle::hurwitz(n, 1, orders);
          if (genus < 2 || genus > 30) return;
          ref.insert(t);
          return;
        }
        for (Element x = 0; x < n; ++x) {
          t[pos] = x;
          rec(pos + 1);
        }
      };
      rec(0);
    }
    CHECK(lib == ref);
  }
}

TEST_CASE("dedup, truncation and the Klein four-group example") {
  auto v4 = build_group("ab:2,2");
  EnumerationOptions opt;
  opt.base_genus = 1;
  opt.branch_orders = std::vector<std::uint32_t>{2, 2};
  std::uint64_t raw = 0;
  bool has_example = false;
  enumerate_vectors(v4, opt, [&](const BranchedCover& c) {
    ++raw;
    CHECK(c.genus == 3);
    if (c.vector.alphas[0] == 1 && c.vector.betas[0] == 2 && c.vector.gammas == std::vector<Element>{1, 1})
      has_example = true;
    return true;
  });
  CHECK(raw == 36);
  CHECK(has_example);

  opt.dedup = true;
  auto res = enumerate_vectors(v4, opt, [](const BranchedCover&) { return true; });
  CHECK(res.dedup == DedupMode::automorphisms);
  // Aut(V4) = S3 acts freely on the 36 vectors (it permutes the three involutions)
  CHECK(res.count == 6);

  opt.dedup = false;
  opt.max_results = 5;
  res = enumerate_vectors(v4, opt, [](const BranchedCover&) { return true; });
  CHECK(res.count == 5);
  CHECK(res.truncated);

  // above the automorphism limit dedup falls back to fingerprints
  EnumerationOptions big;
  big.base_genus = 1;
  big.max_r = 2;
  big.dedup = true;
  big.genus_cap = 200;
  std::set<std::pair<std::vector<std::uint32_t>, std::int64_t>> keys;
  res = enumerate_vectors(build_group("ab:6,6"), big, [&](const BranchedCover& c) {
    auto o = c.vector.branch_orders();
    std::sort(o.begin(), o.end());
    CHECK(keys.emplace(o, c.genus).second);
    return true;
  });
  CHECK(res.dedup == DedupMode::fingerprint);
  CHECK(res.count == keys.size());
}

TEST_CASE("branch data keeps one witness per realisable multiset") {
  for (const char* spec : {"ab:2,2", "sym:3", "dih:4", "quat:8", "ab:2,4"}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    for (std::uint32_t b : {1u, 2u})
      for (std::uint32_t r = 0; r <= 3; ++r) {
        BranchDataOptions opt{b, r, 8, 33, 2};
        auto data = enumerate_branch_data(g, opt);
        std::set<std::vector<Element>> multisets;
        for (const auto& c : data) {
          auto m = c.vector.gammas;
          std::sort(m.begin(), m.end());
          CHECK(multisets.insert(m).second);
        }
        // oracle: multisets of the full enumeration
        std::set<std::vector<Element>> ref;
        if (b == 1) {
          EnumerationOptions eo;
          eo.base_genus = 1;
          eo.max_r = r;
          eo.max_branch_order = 8;
          eo.genus_cap = 33;
          enumerate_vectors(g, eo, [&](const BranchedCover& c) {
            if (c.vector.gammas.size() != r) return true;
            auto m = c.vector.gammas;
            std::sort(m.begin(), m.end());
            ref.insert(m);
            return true;
          });
          CHECK(multisets == ref);
        }
      }
  }
}
