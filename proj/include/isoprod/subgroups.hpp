#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "isoprod/group.hpp"

namespace isoprod {

/// A subgroup H <= G materialised as a standalone GroupTable, with the index maps
/// between the two labelings. H's elements are ordered by their index in G.
struct Subgroup {
  GroupPtr table;
  std::vector<Element> to_parent;          // H index -> G element
  std::vector<std::int32_t> from_parent;   // G element -> H index, or -1
  ElementSet elements;                     // as a subset of G
};

/// Throws DomainError when `members` is not closed under products and inverses.
Subgroup make_subgroup(const GroupPtr& parent, const ElementSet& members);

/// Every subgroup of `g`, ordered by (size, bitset). Exhaustive; intended for small groups.
std::vector<ElementSet> all_subgroups(const GroupTable& g);

/// Interned subgroups with memoised joins <H, x>. Used by the enumerators to test
/// generation incrementally. Not thread-safe; use one instance per worker.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const GroupTable& g);

  static constexpr std::uint32_t trivial() { return 0; }
  /// Index of <H, x> for interned subgroup H.
  std::uint32_t join(std::uint32_t h, Element x);
  const ElementSet& members(std::uint32_t h) const { return subgroups_[h]; }
  bool is_whole_group(std::uint32_t h) const { return subgroups_[h].size() == group_->order(); }
  std::size_t size() const { return subgroups_.size(); }

 private:
  std::uint32_t intern(ElementSet s, std::vector<Element> gens);

  const GroupTable* group_;
  std::vector<ElementSet> subgroups_;
  std::vector<std::vector<Element>> generators_;
  std::vector<std::vector<std::int32_t>> joins_;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> index_;
};

}  // namespace isoprod
