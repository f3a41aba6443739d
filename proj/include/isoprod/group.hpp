#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isoprod/element_set.hpp"

namespace isoprod {

struct ConjugacyClass {
  Element representative = 0;   // smallest member
  std::vector<Element> members;  // sorted
};

/// Invariant factors d_1 | d_2 | ... | d_t, each >= 2. Empty for the trivial group.
struct AbelianInvariants {
  std::vector<std::uint32_t> factors;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Default cap on group orders accepted by the builders.
inline constexpr std::size_t kDefaultOrderCap = 128;
/// Tables up to this order get a full associativity check; larger ones are sampled.
inline constexpr std::size_t kFullAssociativityLimit = 256;

/// A finite group given by its multiplication table. Immutable after construction.
///
/// Elements are dense indices 0..order-1 with the identity at 0. Inverses, element
/// orders, the exponent and the conjugacy classes are precomputed.
class GroupTable {
 public:
  /// Validates `table` (row g, column h holds g*h) and relabels so that the identity
  /// becomes index 0. Throws ConstructionError if the table is not a group.
  GroupTable(std::string spec, std::size_t order, std::vector<Element> table,
             std::vector<std::string> labels = {});

  const std::string& spec() const noexcept { return spec_; }
  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  std::uint32_t element_order(Element a) const noexcept { return element_order_[a]; }
  Element pow(Element a, std::int64_t k) const noexcept;
  /// t g t^-1
  Element conjugate(Element g, Element t) const noexcept { return mul(mul(t, g), inverse_[t]); }
  /// a b a^-1 b^-1
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
  }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find_label(const std::string& label) const;

  std::uint32_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return abelian_; }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(Element g) const noexcept { return class_of_[g]; }
  std::size_t class_size(std::size_t c) const noexcept { return classes_[c].members.size(); }
  /// Class containing the inverses of class `c`.
  std::size_t inverse_class(std::size_t c) const noexcept { return class_of_[inverse_[classes_[c].representative]]; }

  /// Raw multiplication table, row-major.
  const std::vector<Element>& table() const noexcept { return table_; }

  /// Stable 64-bit hash of the multiplication table (labels excluded).
  std::uint64_t table_hash() const noexcept { return table_hash_; }

 private:
  void validate() const;
  void precompute();

  std::string spec_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::uint32_t exponent_ = 1;
  bool abelian_ = true;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::uint64_t table_hash_ = 0;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// Structural queries. All are pure functions of the table.

const std::vector<ConjugacyClass>& conjugacy_classes(const GroupTable& g);
ElementSet center(const GroupTable& g);
ElementSet commutator_subgroup(const GroupTable& g);
ElementSet cyclic_subgroup(const GroupTable& g, Element x);
/// Subgroup generated by `gens` (saturation under right multiplication).
ElementSet generated_subgroup(const GroupTable& g, const std::vector<Element>& gens);
bool is_subgroup(const GroupTable& g, const ElementSet& s);
bool is_normal(const GroupTable& g, const ElementSet& s);
/// Throws DomainError for non-abelian groups.
AbelianInvariants abelian_invariants(const GroupTable& g);

/// Invariant fingerprint: order, class sizes and element-order census.
std::string fingerprint(const GroupTable& g);

/// Smallest generating list found greedily (largest element orders first).
std::vector<Element> generating_set(const GroupTable& g);

/// All automorphisms as element permutations, found by brute force over images of a
/// generating set. Returns nullopt when the candidate image space exceeds `work_limit`.
std::optional<std::vector<std::vector<Element>>> automorphisms(const GroupTable& g,
                                                               std::uint64_t work_limit = 4'000'000);

}  // namespace isoprod
