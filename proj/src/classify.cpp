#include "isoprod/classify.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

#include "isoprod/group_spec.hpp"

namespace isoprod {

ElementSet aut0_from_dimensions(const CharacterTable& table, const ElementSet& centre,
                                const std::vector<ElementSet>& kernels, const std::vector<std::int64_t>& dims_C,
                                const std::vector<std::int64_t>& dims_D) {
  ElementSet out = centre;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (dims_C[i] > 0 && dims_D[table.conjugate_index(i)] > 0) out &= kernels[i];
  return out;
}

bool acts_trivially(const UnmixedSurface& s, Element sigma) {
  const GroupTable& g = *s.group;
  if (sigma >= g.order() || !center(g).contains(sigma))
    throw DomainError("element " + std::to_string(sigma) + " is not central in '" + g.spec() + "'");
  const CharacterTable& t = *s.table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (s.h1_C[i] == 0 || s.h1_D[t.conjugate_index(i)] == 0) continue;
    if (t[i].values[g.class_of(sigma)][0] != t[i].degree) return false;
  }
  return true;
}

ElementSet compute_aut0(const UnmixedSurface& s) {
  const GroupTable& g = *s.group;
  ElementSet out(g.order());
  for (Element z : center(g).elements())
    if (acts_trivially(s, z)) out.insert(z);
  return out;
}

Conformance check_conformance(const UnmixedSurface& s, const ElementSet& aut0) {
  if (aut0.size() <= 1) throw DomainError("conformance is only defined for surfaces with nontrivial aut0");
  const GroupTable& g = *s.group;
  Conformance c;
  auto fail = [&](std::string why) {
    c.conforms = false;
    c.reason = std::move(why);
    return c;
  };
  if (!g.is_abelian()) return fail("group is not abelian");
  auto f = abelian_invariants(g).factors;
  bool shape = (f.size() == 2 && f[0] % 2 == 0 && f[1] % 2 == 0) ||
               (f.size() == 3 && f[0] == 2 && f[1] % 2 == 0 && f[2] % 2 == 0);
  if (!shape) return fail("invariant factors are not of type (2m,2mn) or (2,2m,2mn)");
  const auto& vc = s.cover_C.vector;
  const auto& vd = s.cover_D.vector;
  if (vc.base_genus != 1 || vd.base_genus != 1) return fail("base genera are not both 1");
  auto common = [&](const GeneratingVector& v) -> std::optional<Element> {
    if (v.gammas.empty()) return std::nullopt;
    Element x = v.gammas[0];
    for (Element y : v.gammas)
      if (y != x) return std::nullopt;
    if (g.element_order(x) != 2) return std::nullopt;
    return x;
  };
  auto sigma = common(vc);
  if (!sigma) return fail("branch elements of the first vector are not one involution");
  auto tau = common(vd);
  if (!tau) return fail("branch elements of the second vector are not one involution");
  c.sigma1 = *sigma;
  c.tau1 = *tau;
  if (*sigma == *tau) return fail("the two involutions coincide");
  if (vc.gammas.size() % 2 != 0 || vd.gammas.size() % 2 != 0) return fail("branch point counts are not both even");
  ElementSet expected(g.order(), {GroupTable::identity(), g.mul(*sigma, *tau)});
  if (aut0 != expected) return fail("aut0 differs from {1, sigma1 tau1}");
  c.conforms = true;
  c.reason = "conforms";
  return c;
}

Conformance check_conformance(const ClassificationRecord& rec) { return check_conformance(rec.surface, rec.aut0); }

void validate_bounds(const SearchBounds& bounds) {
  if (bounds.max_group_order == 0) throw UsageError("max group order must be positive");
  if (bounds.genus_cap < 2) throw UsageError("genus cap must be at least 2");
  if (bounds.max_branch_order == 1) throw UsageError("max branch order must be at least 2 (or 0 for unbounded)");
  if (bounds.base_genera.empty()) throw UsageError("no base genera given");
  for (auto [b, bp] : bounds.base_genera) {
    if (b < 1 || b > 2 || bp < 1 || bp > 2)
      throw UsageError("base genera must lie in {1,2}, got (" + std::to_string(b) + "," + std::to_string(bp) + ")");
  }
}

std::vector<std::string> default_groups(const SearchBounds& bounds) {
  return builtin_group_specs(bounds.max_group_order);
}

namespace {

/// Runs produce(i) for i in [0, count) on `workers` threads and hands the results to
/// consume(i, result) on the calling thread in index order.
template <class T, class Produce, class Consume>
void run_ordered(std::size_t count, unsigned workers, Produce produce, Consume consume) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) consume(i, produce(i));
    return;
  }
  std::vector<std::optional<T>> slots(count);
  std::mutex m;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      T r = produce(i);
      {
        std::lock_guard lock(m);
        slots[i] = std::move(r);
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) pool.emplace_back(work);
  for (std::size_t i = 0; i < count; ++i) {
    std::optional<T> r;
    {
      std::unique_lock lock(m);
      cv.wait(lock, [&] { return slots[i].has_value(); });
      r = std::move(slots[i]);
      slots[i].reset();
    }
    consume(i, std::move(*r));
  }
  for (auto& t : pool) t.join();
}

struct Profile {
  CoverProfile profile;
  bool canonical = true;
};

struct GroupData {
  GroupPtr group;
  TablePtr table;
  ElementSet centre;
  std::vector<ElementSet> kernels;
  std::optional<std::vector<std::vector<Element>>> autos;
  std::string error;
};

struct Counters {
  std::uint64_t covers = 0, pairs = 0, non_free = 0, surfaces = 0, nontrivial = 0, conformance_failures = 0,
                errors = 0, dimension_sum_failures = 0, not_subgroup = 0, swap_mismatches = 0, q2_large = 0,
                genus2_nontrivial = 0, max_aut0 = 1;
  std::vector<std::string> messages;

  void add_into(ClassifySummary& s) const {
    s.covers += covers;
    s.pairs += pairs;
    s.non_free += non_free;
    s.surfaces += surfaces;
    s.nontrivial_aut0 += nontrivial;
    s.conformance_failures += conformance_failures;
    s.errors += errors;
    s.dimension_sum_failures += dimension_sum_failures;
    s.aut0_not_subgroup += not_subgroup;
    s.aut0_swap_mismatches += swap_mismatches;
    s.q2_aut0_above_two += q2_large;
    s.genus2_base_nontrivial += genus2_nontrivial;
    s.max_aut0_order = std::max(s.max_aut0_order, max_aut0);
    for (const auto& msg : messages)
      if (s.error_messages.size() < 20) s.error_messages.push_back(msg);
  }
  void error(std::string msg) {
    ++errors;
    if (messages.size() < 20) messages.push_back(std::move(msg));
  }
};

bool is_canonical_multiset(const std::vector<Element>& gammas, const std::vector<std::vector<Element>>& autos) {
  std::vector<Element> img(gammas.size());
  for (const auto& phi : autos) {
    for (std::size_t i = 0; i < gammas.size(); ++i) img[i] = phi[gammas[i]];
    std::sort(img.begin(), img.end());
    if (img < gammas) return false;
  }
  return true;
}

}  // namespace

ClassifySummary classify_all(const SearchBounds& bounds, const std::vector<std::string>& groups,
                             const ClassifyOptions& options,
                             const std::function<void(const ClassificationRecord&)>& sink) {
  validate_bounds(bounds);
  ClassifySummary summary;
  const unsigned workers = std::max(1u, options.workers);
  const BuildOptions build{std::max(bounds.max_group_order, kDefaultOrderCap)};

  // groups, tables, kernels and automorphisms
  std::vector<GroupData> data(groups.size());
  run_ordered<GroupData>(
      groups.size(), workers,
      [&](std::size_t i) {
        GroupData d;
        try {
          d.group = build_group(groups[i], build);
          d.table = cached_character_table(d.group);
          d.centre = center(*d.group);
          for (const auto& chi : d.table->characters()) d.kernels.push_back(kernel(*d.group, chi));
          if (options.reduce_by_automorphisms) d.autos = automorphisms(*d.group);
        } catch (const std::exception& e) {
          d.error = groups[i] + ": " + e.what();
        }
        return d;
      },
      [&](std::size_t i, GroupData d) {
        data[i] = std::move(d);
        if (data[i].error.empty()) {
          ++summary.groups;
        } else {
          ++summary.errors;
          if (summary.error_messages.size() < 20) summary.error_messages.push_back(data[i].error);
        }
      });

  // branch data per (group, b, r)
  std::set<std::uint32_t> base_values;
  for (auto [b, bp] : bounds.base_genera) {
    base_values.insert(b);
    base_values.insert(bp);
  }
  const std::uint32_t max_points = std::max(bounds.max_r, bounds.max_s);
  struct CoverUnit {
    std::size_t group;
    std::uint32_t b, r;
  };
  std::vector<CoverUnit> cover_units;
  for (std::size_t gi = 0; gi < data.size(); ++gi) {
    if (!data[gi].error.empty()) continue;
    for (auto b : base_values)
      for (std::uint32_t r = 0; r <= max_points; ++r) cover_units.push_back({gi, b, r});
  }
  std::map<std::tuple<std::size_t, std::uint32_t, std::uint32_t>, std::vector<Profile>> profiles;
  struct CoverResult {
    std::vector<Profile> profiles;
    Counters counters;
  };
  run_ordered<CoverResult>(
      cover_units.size(), workers,
      [&](std::size_t i) {
        const auto& u = cover_units[i];
        const GroupData& d = data[u.group];
        CoverResult res;
        try {
          BranchDataOptions opt{u.b, u.r, bounds.max_branch_order, bounds.genus_cap, bounds.min_genus};
          for (auto& cover : enumerate_branch_data(d.group, opt)) {
            ++res.counters.covers;
            try {
              Profile p{make_profile(cover, *d.table), true};
              auto total = std::accumulate(p.profile.dims.begin(), p.profile.dims.end(), std::int64_t{0});
              if (total != 2 * cover.genus) {
                ++res.counters.dimension_sum_failures;
                if (res.counters.messages.size() < 20)
                  res.counters.messages.push_back(d.group->spec() + ": isotypic dimensions sum to " +
                                                  std::to_string(total) + ", expected " +
                                                  std::to_string(2 * cover.genus));
              }
              if (d.autos) p.canonical = is_canonical_multiset(cover.vector.gammas, *d.autos);
              res.profiles.push_back(std::move(p));
            } catch (const std::exception& e) {
              res.counters.error(d.group->spec() + ": " + e.what());
            }
          }
        } catch (const std::exception& e) {
          res.counters.error(d.group->spec() + ": " + e.what());
        }
        return res;
      },
      [&](std::size_t i, CoverResult res) {
        const auto& u = cover_units[i];
        res.counters.add_into(summary);
        profiles[{u.group, u.b, u.r}] = std::move(res.profiles);
      });

  // surfaces per (group, b, b', r, s)
  struct PairUnit {
    std::size_t group;
    std::uint32_t b, bp, r, s;
  };
  std::vector<PairUnit> pair_units;
  for (std::size_t gi = 0; gi < data.size(); ++gi) {
    if (!data[gi].error.empty()) continue;
    for (auto [b, bp] : bounds.base_genera)
      for (std::uint32_t r = 0; r <= bounds.max_r; ++r)
        for (std::uint32_t s = 0; s <= bounds.max_s; ++s) {
          if (profiles[{gi, b, r}].empty() || profiles[{gi, bp, s}].empty()) continue;
          pair_units.push_back({gi, b, bp, r, s});
        }
  }
  struct PairResult {
    std::vector<ClassificationRecord> records;
    Counters counters;
  };
  run_ordered<PairResult>(
      pair_units.size(), workers,
      [&](std::size_t i) {
        const auto& u = pair_units[i];
        const GroupData& d = data[u.group];
        const GroupTable& g = *d.group;
        const auto& first = profiles.at({u.group, u.b, u.r});
        const auto& second = profiles.at({u.group, u.bp, u.s});
        PairResult res;
        auto& k = res.counters;
        for (const auto& pc : first) {
          if (!pc.canonical) continue;
          for (const auto& pd : second) {
            ++k.pairs;
            try {
              if (freeness_witness(pc.profile.stabilizers, pd.profile.stabilizers)) {
                ++k.non_free;
                continue;
              }
              auto inv = surface_invariants(*d.table, pc.profile, pd.profile);
              ++k.surfaces;
              auto aut0 = aut0_from_dimensions(*d.table, d.centre, d.kernels, pc.profile.dims, pd.profile.dims);
              auto swapped = aut0_from_dimensions(*d.table, d.centre, d.kernels, pd.profile.dims, pc.profile.dims);
              if (swapped != aut0) ++k.swap_mismatches;
              if (!aut0.contains(GroupTable::identity()) || !is_subgroup(g, aut0)) ++k.not_subgroup;
              const std::size_t order = aut0.size();
              k.max_aut0 = std::max<std::uint64_t>(k.max_aut0, order);
              const bool nontrivial = order > 1;
              if (inv.q == 2 && order > 2) ++k.q2_large;
              if (nontrivial && (u.b == 2 || u.bp == 2)) ++k.genus2_nontrivial;
              Conformance conf;
              if (nontrivial) {
                ++k.nontrivial;
                UnmixedSurface surf{d.group, d.table, pc.profile.cover, pd.profile.cover, pc.profile.dims,
                                    pd.profile.dims, inv};
                conf = check_conformance(surf, aut0);
                if (!conf.conforms) ++k.conformance_failures;
                if (options.records != RecordFilter::none)
                  res.records.push_back({std::move(surf), std::move(aut0), std::move(conf)});
              } else if (options.records == RecordFilter::all) {
                res.records.push_back({UnmixedSurface{d.group, d.table, pc.profile.cover, pd.profile.cover,
                                                      pc.profile.dims, pd.profile.dims, std::move(inv)},
                                       std::move(aut0), conf});
              }
            } catch (const std::exception& e) {
              k.error(g.spec() + ": " + e.what());
            }
          }
        }
        return res;
      },
      [&](std::size_t, PairResult res) {
        res.counters.add_into(summary);
        for (const auto& rec : res.records) sink(rec);
      });
  return summary;
}

}  // namespace isoprod
