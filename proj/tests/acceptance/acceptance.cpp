// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "isoprod/classify.hpp"
#include "isoprod/group_spec.hpp"
#include "isoprod/subgroups.hpp"

using namespace isoprod;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Params {
  std::uint32_t m, n, k, l;
};

// (m, n, k, l) with m^2 n max(k, l) <= 8
std::vector<Params> example_grid() {
  std::vector<Params> out;
  for (std::uint32_t m = 1; m * m <= 8; ++m)
    for (std::uint32_t n = 1; m * m * n <= 8; ++n)
      for (std::uint32_t k = 1; m * m * n * k <= 8; ++k)
        for (std::uint32_t l = 1; m * m * n * l <= 8; ++l) out.push_back({m, n, k, l});
  return out;
}

std::string str(const Params& p) {
  return "(m,n,k,l)=(" + std::to_string(p.m) + "," + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
         std::to_string(p.l) + ")";
}

SearchBounds sweep_bounds() {
  SearchBounds b;
  b.max_group_order = 16;
  b.max_r = 4;
  b.max_s = 4;
  b.max_branch_order = 8;
  b.genus_cap = 33;
  b.base_genera = {{1, 1}};
  return b;
}

const std::vector<std::string> kNonAbelian = {"dih:3", "dih:4", "dih:5", "dih:6", "dih:7", "dih:8",
                                              "quat:8", "sym:3", "sym:4", "alt:4"};

Outcome criterion1() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& p : example_grid()) {
    auto ex = explicit_family_construct(ExplicitFamily::z2m_z2mn, p.m, p.n, p.k, p.l);
    const auto& s = ex.surface;
    const std::int64_t u = std::int64_t{p.m} * p.m * p.n;
    const std::int64_t kl = std::int64_t{p.k} * p.l;
    if (s.cover_C.genus != 2 * u * p.k + 1) o.fail(str(p) + ": g(C) = " + std::to_string(s.cover_C.genus));
    if (s.cover_D.genus != 2 * u * p.l + 1) o.fail(str(p) + ": g(D) = " + std::to_string(s.cover_D.genus));
    if (s.invariants.q != 2) o.fail(str(p) + ": q = " + std::to_string(s.invariants.q));
    if (s.invariants.pg != u * kl + 1) o.fail(str(p) + ": p_g = " + std::to_string(s.invariants.pg));
    if (s.invariants.K2 != 8 * u * kl) o.fail(str(p) + ": K^2 = " + std::to_string(s.invariants.K2));
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " parameter tuples";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t n = 0;
  for (auto family : {ExplicitFamily::z2m_z2mn, ExplicitFamily::z2_z2m_z2mn})
    for (const auto& p : example_grid()) {
      auto ex = explicit_family_construct(family, p.m, p.n, p.k, p.l);
      const auto& g = *ex.surface.group;
      const Element sigma = g.mul(ex.gamma, ex.gamma_prime);
      auto aut0 = compute_aut0(ex.surface);
      std::string tag = explicit_family_group_spec(family, p.m, p.n) + " " + str(p);
      if (oracle::as_set(aut0) != std::set<Element>{0, sigma}) o.fail(tag + ": aut0 has order " + std::to_string(aut0.size()));
      if (g.element_order(sigma) != 2) o.fail(tag + ": gamma gamma' is not an involution");
      auto ref = oracle::aut0(*ex.surface.table, 1, ex.surface.cover_C.vector.gammas, 1,
                              ex.surface.cover_D.vector.gammas);
      if (ref != oracle::as_set(aut0)) o.fail(tag + ": disagrees with the floating point oracle");
      ++n;
    }
  if (o.pass) o.detail = std::to_string(n) + " surfaces";
  return o;
}

struct SweepData {
  ClassifySummary reduced;
  ClassifySummary full;
  std::uint64_t b2_checked = 0;
  std::vector<std::string> b2_failures;
};

SweepData run_sweep(unsigned workers) {
  SweepData d;
  ClassifyOptions opt;
  opt.workers = workers;
  opt.records = RecordFilter::all;
  auto b = sweep_bounds();
  auto check_b2 = [&](const ClassificationRecord& r) {
    const auto& inv = r.surface.invariants;
    std::int64_t total = 2;
    const auto& t = *r.surface.table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto deg = static_cast<std::int64_t>(t[i].degree);
      auto prod = r.surface.h1_C[i] * r.surface.h1_D[t.conjugate_index(i)];
      if (prod % (deg * deg) != 0 && d.b2_failures.size() < 5)
        d.b2_failures.push_back(r.surface.group->spec() + ": summand not integral");
      total += prod / (deg * deg);
    }
    if (total != 4 * inv.chi - 2 + 4 * inv.q && d.b2_failures.size() < 5)
      d.b2_failures.push_back(r.surface.group->spec() + ": b2 " + std::to_string(total) + " vs " +
                              std::to_string(4 * inv.chi - 2 + 4 * inv.q));
    ++d.b2_checked;
  };
  d.reduced = classify_all(b, default_groups(b), opt, check_b2);
  opt.reduce_by_automorphisms = false;
  d.full = classify_all(b, default_groups(b), opt, check_b2);
  return d;
}

void check_clean(Outcome& o, const ClassifySummary& s, const char* what) {
  if (s.errors) o.fail(std::string(what) + ": " + std::to_string(s.errors) + " errors, first: " +
                       (s.error_messages.empty() ? "" : s.error_messages.front()));
  if (s.conformance_failures) o.fail(std::string(what) + ": " + std::to_string(s.conformance_failures) + " conformance failures");
  if (!s.invariants_hold()) o.fail(std::string(what) + ": an invariant check failed");
}

Outcome criterion3(const SweepData& d) {
  Outcome o;
  check_clean(o, d.reduced, "reduced sweep");
  check_clean(o, d.full, "unreduced sweep");
  if (d.reduced.nontrivial_aut0 == 0) o.fail("no surface with nontrivial aut0 was found");
  if (d.full.nontrivial_aut0 < d.reduced.nontrivial_aut0) o.fail("unreduced sweep found fewer examples");
  if (o.pass)
    o.detail = std::to_string(d.reduced.groups) + " groups, " + std::to_string(d.reduced.surfaces) + " surfaces (" +
               std::to_string(d.full.surfaces) + " unreduced), " + std::to_string(d.reduced.nontrivial_aut0) +
               " with nontrivial aut0 (" + std::to_string(d.full.nontrivial_aut0) + " unreduced), all conforming";
  return o;
}

Outcome criterion4(unsigned workers) {
  Outcome o;
  auto b = sweep_bounds();
  b.max_group_order = 24;
  ClassifyOptions opt;
  opt.workers = workers;
  opt.reduce_by_automorphisms = false;
  opt.records = RecordFilter::none;
  auto s = classify_all(b, kNonAbelian, opt, [](const ClassificationRecord&) {});
  check_clean(o, s, "non-abelian sweep");
  if (s.groups != kNonAbelian.size()) o.fail("only " + std::to_string(s.groups) + " groups were swept");
  if (s.nontrivial_aut0 != 0) o.fail(std::to_string(s.nontrivial_aut0) + " surfaces with nontrivial aut0");
  if (s.surfaces == 0) o.fail("no surfaces were built");
  if (o.pass) o.detail = std::to_string(s.surfaces) + " surfaces, nontrivial_aut0 = 0";
  return o;
}

// Orthogonality in floating point from the multiplicity vectors, independent of the
// library's exact check.
bool float_orthogonal(const CharacterTable& t) {
  const auto& g = t.group();
  const double n = static_cast<double>(g.order());
  std::vector<std::vector<oracle::cplx>> v(t.size(), std::vector<oracle::cplx>(g.order()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (Element x = 0; x < g.order(); ++x) v[i][x] = oracle::value(g, t[i], x);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      oracle::cplx s = 0;
      for (Element x = 0; x < g.order(); ++x) s += v[i][x] * std::conj(v[j][x]);
      if (std::abs(s / n - (i == j ? 1.0 : 0.0)) > 1e-9) return false;
    }
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      oracle::cplx s = 0;
      for (std::size_t i = 0; i < t.size(); ++i) s += v[i][x] * std::conj(v[i][y]);
      bool conj = g.class_of(x) == g.class_of(y);
      double expect = conj ? n / static_cast<double>(g.class_size(g.class_of(x))) : 0.0;
      if (std::abs(s - expect) > 1e-9) return false;
    }
  return true;
}

Outcome criterion5() {
  Outcome o;
  std::size_t groups = 0, abelian = 0;
  for (const auto& spec : builtin_group_specs(24)) {
    auto g = build_group(spec);
    auto t = character_table(g);
    auto check = verify_table(t);
    if (!check.ok()) o.fail(spec + ": " + check.detail);
    std::int64_t sq = 0;
    for (const auto& chi : t.characters()) sq += std::int64_t{chi.degree} * chi.degree;
    if (sq != static_cast<std::int64_t>(g->order())) o.fail(spec + ": degree squares sum to " + std::to_string(sq));
    if (!float_orthogonal(t)) o.fail(spec + ": floating point orthogonality fails");
    if (g->is_abelian()) {
      auto a = character_table(g, TableMethod::abelian);
      auto d = character_table(g, TableMethod::dixon);
      std::set<std::vector<std::vector<std::uint32_t>>> sa, sd;
      for (const auto& chi : a.characters()) sa.insert(chi.values);
      for (const auto& chi : d.characters()) sd.insert(chi.values);
      if (sa != sd) o.fail(spec + ": abelian and Dixon tables differ");
      ++abelian;
    }
    ++groups;
  }
  if (o.pass) o.detail = std::to_string(groups) + " groups, " + std::to_string(abelian) + " abelian compared";
  return o;
}

// Every generating vector in the sweep bounds, not only the branch data representatives.
Outcome criterion6(const SweepData& d) {
  Outcome o;
  if (d.reduced.dimension_sum_failures || d.full.dimension_sum_failures)
    o.fail("sweep reported dimension sum failures");
  auto b = sweep_bounds();
  std::uint64_t covers = 0;
  for (const auto& spec : default_groups(b)) {
    auto g = build_group(spec);
    auto table = cached_character_table(g);
    EnumerationOptions opt;
    opt.base_genus = 1;
    opt.max_r = b.max_r;
    opt.max_branch_order = b.max_branch_order;
    opt.genus_cap = b.genus_cap;
    opt.min_genus = b.min_genus;
    enumerate_vectors(g, opt, [&](const BranchedCover& c) {
      auto dims = isotypic_dimensions(c, *table);
      std::int64_t total = 0;
      for (auto x : dims) total += x;
      if (total != 2 * c.genus) o.fail(spec + ": dimensions sum to " + std::to_string(total));
      ++covers;
      return true;
    });
  }
  if (o.pass) o.detail = std::to_string(covers) + " generating vectors";
  return o;
}

Outcome criterion7(const SweepData& d) {
  Outcome o;
  for (const auto& f : d.b2_failures) o.fail(f);
  if (d.reduced.errors || d.full.errors) o.fail("surface construction reported errors");
  if (d.b2_checked == 0) o.fail("no surfaces checked");
  if (o.pass) o.detail = std::to_string(d.b2_checked) + " surfaces";
  return o;
}

// <chi^G, phi>_G = <chi, phi|_H>_H, evaluated in floating point.
bool is_constituent(const GroupTable& g, const Subgroup& h, const CharacterTable& ht, std::size_t chi,
                    const CharacterTable& gt, std::size_t phi) {
  oracle::cplx s = 0;
  for (Element y = 0; y < h.table->order(); ++y)
    s += oracle::value(*h.table, ht[chi], y) * std::conj(oracle::value(g, gt[phi], h.to_parent[y]));
  return std::lround((s / static_cast<double>(h.table->order())).real()) > 0;
}

bool in_kernel(const GroupTable& g, const Character& phi, Element x) {
  return std::abs(oracle::value(g, phi, x) - static_cast<double>(phi.degree)) < 1e-9;
}

Outcome criterion8() {
  Outcome o;
  std::uint64_t part1 = 0, part2 = 0, contradictions = 0;
  for (const auto& spec : builtin_group_specs(16)) {
    auto gp = build_group(spec);
    const auto& g = *gp;
    auto gt = cached_character_table(gp);
    for (const auto& members : all_subgroups(g)) {
      auto h = make_subgroup(gp, members);
      auto ht = cached_character_table(h.table);
      for (std::size_t chi = 0; chi < ht->size(); ++chi) {
        ConstituentFinder finder(gt, h, *ht, chi);
        std::vector<Element> zeros;
        for (Element x = 0; x < g.order(); ++x)
          if (finder.induced_vanishes_at(x)) zeros.push_back(x);
        for (Element y = 0; y < h.table->order(); ++y) {
          if (in_kernel(*h.table, (*ht)[chi], y)) continue;
          const Element hx = h.to_parent[y];
          const Element avoid[] = {hx};
          auto check = [&](std::optional<Element> extra) {
            try {
              std::size_t phi = finder.find(avoid, extra);
              bool ok = is_constituent(g, h, *ht, chi, *gt, phi) && !in_kernel(g, (*gt)[phi], hx);
              if (extra) ok = ok && !in_kernel(g, (*gt)[phi], *extra);
              if (!ok) o.fail(spec + ": returned character does not satisfy the conclusion");
            } catch (const Error& e) {
              ++contradictions;
              o.fail(spec + ": " + e.what());
            }
          };
          check(std::nullopt);
          ++part1;
          for (Element z : zeros) {
            check(z);
            ++part2;
          }
        }
      }
    }
  }
  if (part2 == 0) o.fail("part (ii) was never exercised");
  if (o.pass)
    o.detail = std::to_string(part1) + " single-element cases, " + std::to_string(part2) +
               " cases with a vanishing point, 0 contradictions";
  else
    o.detail += " (" + std::to_string(contradictions) + " errors)";
  return o;
}

Outcome criterion9(unsigned workers) {
  Outcome o;
  auto b = sweep_bounds();
  b.base_genera = {{1, 2}, {2, 1}, {2, 2}};
  ClassifyOptions opt;
  opt.workers = workers;
  opt.reduce_by_automorphisms = false;
  opt.records = RecordFilter::none;
  auto s = classify_all(b, default_groups(b), opt, [](const ClassificationRecord&) {});
  if (s.errors) o.fail(std::to_string(s.errors) + " errors");
  if (s.nontrivial_aut0 != 0 || s.genus2_base_nontrivial != 0)
    o.fail(std::to_string(s.nontrivial_aut0) + " surfaces with nontrivial aut0");
  if (s.surfaces == 0) o.fail("no surfaces were built");
  if (o.pass) o.detail = std::to_string(s.surfaces) + " surfaces, all with trivial aut0";
  return o;
}

}  // namespace

int main() {
  const unsigned workers = 4;
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& run) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  SweepData sweep;
  report(1, "explicit family invariants", criterion1);
  report(2, "explicit family aut0", criterion2);
  report(3, "classification sweep", [&] {
    sweep = run_sweep(workers);
    return criterion3(sweep);
  });
  report(4, "non-abelian control", [&] { return criterion4(workers); });
  report(5, "character tables", criterion5);
  report(6, "isotypic dimension sums", [&] { return criterion6(sweep); });
  report(7, "b2 cross-check", [&] { return criterion7(sweep); });
  report(8, "induced constituents", criterion8);
  report(9, "genus two bases", [&] { return criterion9(workers); });
  return failures == 0 ? 0 : 1;
}
