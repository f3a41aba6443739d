#include <algorithm>
#include <map>
#include <set>

#include "isoprod/covering.hpp"
#include "isoprod/subgroups.hpp"

namespace isoprod {

namespace {

/// n - n/m, the contribution of one branch point of order m to 2g - 2.
std::int64_t branch_weight(std::size_t n, std::uint32_t m) {
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(n / m);
}

/// Calls f on every tuple in G^len in lexicographic order; f returns false to stop.
template <class F>
bool for_each_tuple(std::size_t n, std::size_t len, F&& f) {
  std::vector<Element> t(len, 0);
  while (true) {
    if (!f(t)) return false;
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return true;
    }
    if (len == 0) return true;
  }
}

}  // namespace

EnumerationResult enumerate_vectors(const GroupPtr& group, const EnumerationOptions& options,
                                    const std::function<bool(const BranchedCover&)>& visitor) {
  const GroupTable& g = *group;
  const std::size_t n = g.order();
  const std::uint32_t b = options.base_genus;
  if (b > 2) throw DomainError("base genus above 2 is not supported");
  EnumerationResult result;

  std::optional<std::vector<std::vector<Element>>> autos;
  if (options.dedup) {
    if (n <= kAutomorphismDedupLimit) autos = automorphisms(g);
    result.dedup = autos ? DedupMode::automorphisms : DedupMode::fingerprint;
  }
  std::set<std::pair<std::vector<std::uint32_t>, std::int64_t>> seen_fingerprints;

  std::vector<std::uint32_t> r_values;
  if (options.branch_orders) {
    r_values.push_back(static_cast<std::uint32_t>(options.branch_orders->size()));
  } else {
    for (std::uint32_t r = 0; r <= options.max_r; ++r) r_values.push_back(r);
  }
  auto order_ok = [&](std::size_t pos, Element x) {
    if (x == g.identity()) return false;
    std::uint32_t m = g.element_order(x);
    if (options.branch_orders) return m == (*options.branch_orders)[pos];
    return options.max_branch_order == 0 || m <= options.max_branch_order;
  };
  // smallest possible contribution of a branch point, used to prune on the genus cap
  std::int64_t min_weight = static_cast<std::int64_t>(n);
  for (std::size_t x = 1; x < n; ++x)
    if (order_ok(0, static_cast<Element>(x)) || options.branch_orders)
      min_weight = std::min(min_weight, branch_weight(n, g.element_order(static_cast<Element>(x))));

  SubgroupLattice lattice(g);
  const std::int64_t cap_twice = 2 * options.genus_cap - 2;
  const std::int64_t base_twice = static_cast<std::int64_t>(n) * (2 * static_cast<std::int64_t>(b) - 2);

  auto emit = [&](const GeneratingVector& v, std::int64_t genus) -> bool {
    if (autos) {
      std::vector<Element> t = v.alphas;
      t.insert(t.end(), v.betas.begin(), v.betas.end());
      t.insert(t.end(), v.gammas.begin(), v.gammas.end());
      std::vector<Element> img(t.size());
      for (const auto& phi : *autos) {
        for (std::size_t i = 0; i < t.size(); ++i) img[i] = phi[t[i]];
        if (img < t) return true;  // not the orbit minimum
      }
    } else if (options.dedup) {
      auto orders = v.branch_orders();
      std::sort(orders.begin(), orders.end());
      if (!seen_fingerprints.emplace(std::move(orders), genus).second) return true;
    }
    if (options.max_results != 0 && result.count >= options.max_results) {
      result.truncated = true;
      return false;
    }
    ++result.count;
    if (!visitor(BranchedCover{v, genus})) {
      result.truncated = true;
      return false;
    }
    return true;
  };

  for_each_tuple(n, 2 * b, [&](const std::vector<Element>& ab) {
    Element prod = g.identity();
    std::uint32_t h = SubgroupLattice::trivial();
    for (std::uint32_t j = 0; j < b; ++j) {
      prod = g.mul(prod, g.commutator(ab[2 * j], ab[2 * j + 1]));
      h = lattice.join(lattice.join(h, ab[2 * j]), ab[2 * j + 1]);
    }
    GeneratingVector v{group, b, {}, {}, {}};
    for (std::uint32_t j = 0; j < b; ++j) {
      v.alphas.push_back(ab[2 * j]);
      v.betas.push_back(ab[2 * j + 1]);
    }
    for (std::uint32_t r : r_values) {
      if (r > 0 && base_twice + static_cast<std::int64_t>(r) * min_weight > cap_twice) continue;
      v.gammas.assign(r, 0);
      // depth-first over gamma_1..gamma_{r-1}; gamma_r closes the relation
      std::function<bool(std::size_t, Element, std::uint32_t, std::int64_t)> rec =
          [&](std::size_t pos, Element partial, std::uint32_t sub, std::int64_t twice) -> bool {
        if (pos + 1 >= r) {
          if (r == 0) {
            if (partial != g.identity() || !lattice.is_whole_group(sub)) return true;
          } else {
            Element last = g.inverse(partial);
            if (!order_ok(pos, last)) return true;
            twice += branch_weight(n, g.element_order(last));
            if (!lattice.is_whole_group(lattice.join(sub, last))) return true;
            v.gammas[pos] = last;
          }
          if (twice < -2 || twice % 2 != 0) return true;
          std::int64_t genus = twice / 2 + 1;
          if (genus > options.genus_cap || genus < options.min_genus) return true;
          return emit(v, genus);
        }
        for (std::size_t x = 1; x < n; ++x) {
          auto e = static_cast<Element>(x);
          if (!order_ok(pos, e)) continue;
          std::int64_t t = twice + branch_weight(n, g.element_order(e));
          if (t + static_cast<std::int64_t>(r - pos - 1) * min_weight > cap_twice) continue;
          v.gammas[pos] = e;
          if (!rec(pos + 1, g.mul(partial, e), lattice.join(sub, e), t)) return false;
        }
        return true;
      };
      if (!rec(0, prod, h, base_twice)) return false;
    }
    return true;
  });
  return result;
}

std::vector<BranchedCover> enumerate_branch_data(const GroupPtr& group, const BranchDataOptions& options) {
  const GroupTable& g = *group;
  const std::size_t n = g.order();
  const std::uint32_t b = options.base_genus;
  const std::uint32_t r = options.r;
  if (b > 2) throw DomainError("base genus above 2 is not supported");
  SubgroupLattice lattice(g);

  std::vector<Element> candidates;
  for (std::size_t x = 1; x < n; ++x) {
    auto m = g.element_order(static_cast<Element>(x));
    if (options.max_branch_order == 0 || m <= options.max_branch_order) candidates.push_back(static_cast<Element>(x));
  }
  std::int64_t min_weight = static_cast<std::int64_t>(n);
  for (Element x : candidates) min_weight = std::min(min_weight, branch_weight(n, g.element_order(x)));
  const std::int64_t cap_twice = 2 * options.genus_cap - 2;
  const std::int64_t base_twice = static_cast<std::int64_t>(n) * (2 * static_cast<std::int64_t>(b) - 2);

  // witness alpha/beta tuple for (c, H): prod [alpha_j, beta_j] = c and <alphas, betas, H> = G
  std::map<std::pair<Element, std::uint32_t>, std::optional<std::vector<Element>>> memo;
  auto witness = [&](Element c, std::uint32_t h) -> const std::optional<std::vector<Element>>& {
    auto [it, inserted] = memo.try_emplace({c, h});
    if (!inserted) return it->second;
    std::optional<std::vector<Element>> found;
    for_each_tuple(n, 2 * b, [&](const std::vector<Element>& ab) {
      Element prod = g.identity();
      std::uint32_t sub = h;
      for (std::uint32_t j = 0; j < b; ++j) {
        prod = g.mul(prod, g.commutator(ab[2 * j], ab[2 * j + 1]));
        sub = lattice.join(lattice.join(sub, ab[2 * j]), ab[2 * j + 1]);
      }
      if (prod == c && lattice.is_whole_group(sub)) {
        found = ab;
        return false;
      }
      return true;
    });
    it->second = std::move(found);
    return it->second;
  };

  std::vector<BranchedCover> out;
  std::vector<Element> multiset(r);
  std::function<void(std::size_t, std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::size_t from,
                                                                        std::int64_t twice) {
    if (pos == r) {
      if (twice < -2 || twice % 2 != 0) return;
      std::int64_t genus = twice / 2 + 1;
      if (genus > options.genus_cap || genus < options.min_genus) return;
      std::vector<Element> order = multiset;
      do {
        Element prod = g.identity();
        std::uint32_t h = SubgroupLattice::trivial();
        for (Element x : order) {
          prod = g.mul(prod, x);
          h = lattice.join(h, x);
        }
        const auto& w = witness(g.inverse(prod), h);
        if (w) {
          GeneratingVector v{group, b, {}, {}, order};
          for (std::uint32_t j = 0; j < b; ++j) {
            v.alphas.push_back((*w)[2 * j]);
            v.betas.push_back((*w)[2 * j + 1]);
          }
          out.push_back(validate_vector(v));
          return;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      std::int64_t t = twice + branch_weight(n, g.element_order(candidates[i]));
      if (t + static_cast<std::int64_t>(r - pos - 1) * min_weight > cap_twice) continue;
      multiset[pos] = candidates[i];
      rec(pos + 1, i, t);
    }
  };
  rec(0, 0, base_twice);
  return out;
}

}  // namespace isoprod
