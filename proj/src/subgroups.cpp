#include "isoprod/subgroups.hpp"

#include <algorithm>

#include "isoprod/errors.hpp"

namespace isoprod {

Subgroup make_subgroup(const GroupPtr& parent, const ElementSet& members) {
  const GroupTable& g = *parent;
  if (members.universe() != g.order() || !is_subgroup(g, members))
    throw DomainError("subset of '" + g.spec() + "' is not a subgroup");
  Subgroup h;
  h.elements = members;
  h.to_parent = members.elements();
  h.from_parent.assign(g.order(), -1);
  for (std::size_t i = 0; i < h.to_parent.size(); ++i) h.from_parent[h.to_parent[i]] = static_cast<std::int32_t>(i);
  const std::size_t n = h.to_parent.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(g.label(h.to_parent[i]));
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Element>(h.from_parent[g.mul(h.to_parent[i], h.to_parent[j])]);
  }
  std::string spec = "sub(" + g.spec() + ";";
  for (std::size_t i = 0; i < n; ++i) spec += (i ? "," : "") + std::to_string(h.to_parent[i]);
  spec += ")";
  h.table = std::make_shared<const GroupTable>(std::move(spec), n, std::move(table), std::move(labels));
  return h;
}

SubgroupLattice::SubgroupLattice(const GroupTable& g) : group_(&g) {
  ElementSet trivial_set(g.order());
  trivial_set.insert(0);
  intern(std::move(trivial_set), {});
}

std::uint32_t SubgroupLattice::intern(ElementSet s, std::vector<Element> gens) {
  auto [it, inserted] = index_.emplace(s, static_cast<std::uint32_t>(subgroups_.size()));
  if (inserted) {
    subgroups_.push_back(std::move(s));
    generators_.push_back(std::move(gens));
    joins_.emplace_back(group_->order(), -1);
  }
  return it->second;
}

std::uint32_t SubgroupLattice::join(std::uint32_t h, Element x) {
  std::int32_t cached = joins_[h][x];
  if (cached >= 0) return static_cast<std::uint32_t>(cached);
  std::uint32_t result;
  if (subgroups_[h].contains(x)) {
    result = h;
  } else {
    auto gens = generators_[h];
    gens.push_back(x);
    result = intern(generated_subgroup(*group_, gens), gens);
  }
  joins_[h][x] = static_cast<std::int32_t>(result);
  return result;
}

std::vector<ElementSet> all_subgroups(const GroupTable& g) {
  SubgroupLattice lattice(g);
  std::vector<std::uint32_t> queue{SubgroupLattice::trivial()};
  std::vector<bool> seen{true};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto j = lattice.join(queue[i], static_cast<Element>(x));
      if (j >= seen.size()) seen.resize(j + 1, false);
      if (!seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) out.push_back(lattice.members(static_cast<std::uint32_t>(i)));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace isoprod
