#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoprod/cyclotomic.hpp"
#include "isoprod/group.hpp"
#include "isoprod/subgroups.hpp"

namespace isoprod {

/// An irreducible character stored as eigenvalue multiplicities. For class c,
/// values[c][k] is the multiplicity of exp(2 pi i k / e) as an eigenvalue of a
/// representing matrix, e being the group exponent. So chi(g) = sum_k m_k zeta_e^k,
/// and every row sums to the degree.
struct Character {
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> values;

  friend bool operator==(const Character&, const Character&) = default;
};

bool is_trivial_character(const Character& chi);
/// Complex conjugate: m_k -> m_(-k).
Character conjugate_character(const Character& chi);
/// chi evaluated on class `cls` as an exact cyclotomic in Z[zeta_exponent].
Cyclotomic character_value(const Character& chi, std::size_t cls);

/// Complete table of irreducible characters. Characters are ordered by degree, then by
/// multiplicity vectors in descending lexicographic order, which puts the trivial
/// character first.
class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<Character> characters);

  const GroupTable& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::uint32_t exponent() const noexcept { return group_->exponent(); }
  std::size_t size() const noexcept { return characters_.size(); }
  const Character& operator[](std::size_t i) const { return characters_[i]; }
  const std::vector<Character>& characters() const noexcept { return characters_; }

  static constexpr std::size_t trivial_index() noexcept { return 0; }
  std::size_t conjugate_index(std::size_t i) const { return conjugate_[i]; }
  std::span<const std::uint32_t> multiplicities(std::size_t chi, Element g) const {
    return characters_[chi].values[group_->class_of(g)];
  }
  Cyclotomic value(std::size_t chi, std::size_t cls) const { return character_value(characters_[chi], cls); }
  /// Index of `chi` in this table, if present.
  std::optional<std::size_t> find(const Character& chi) const;

 private:
  GroupPtr group_;
  std::vector<Character> characters_;
  std::vector<std::size_t> conjugate_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

enum class TableMethod { automatic, abelian, dixon };

/// Computes the table. `automatic` uses the abelian construction for abelian groups and
/// Dixon's modular method otherwise. Throws DomainError when `abelian` is forced on a
/// non-abelian group, ConsistencyError if a postcondition fails.
CharacterTable character_table(const GroupPtr& group, TableMethod method = TableMethod::automatic);

/// Smallest prime p = 1 (mod e) with p > 2|G|, used by the modular method.
std::uint64_t dixon_prime(std::size_t order, std::uint32_t exponent);

std::vector<Character> abelian_characters(const GroupTable& g);
std::vector<Character> dixon_characters(const GroupTable& g);

/// Process-wide table cache keyed by the group's spec and table hash. Falls back to the
/// on-disk cache when a directory has been configured (see table_cache.hpp).
TablePtr cached_character_table(const GroupPtr& group);

ElementSet kernel(const GroupTable& g, const Character& chi);
/// Multiplicity of the trivial character in chi restricted to <sigma>.
std::uint32_t trivial_multiplicity_on_cyclic(const GroupTable& g, const Character& chi, Element sigma);

/// A class function with exact values, one per conjugacy class of its group.
struct ClassFunction {
  std::uint32_t exponent = 1;
  std::vector<Cyclotomic> values;
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction as_class_function(const CharacterTable& table, std::size_t chi);
/// Same, with values embedded in Z[zeta_exponent] (exponent a multiple of the table's).
ClassFunction as_class_function(const CharacterTable& table, std::size_t chi, std::uint32_t exponent);

/// chi^G(g) = (1/|H|) sum_{t in G} chi°(t g t^-1), chi° vanishing off H. Values live
/// in Z[zeta_e] with e the exponent of G.
ClassFunction induced_character(const GroupTable& g, const Subgroup& h, const CharacterTable& h_table,
                                std::size_t chi);

/// phi|_H as a class function on H, values in Z[zeta_e(G)].
ClassFunction restrict_character(const CharacterTable& g_table, std::size_t phi, const Subgroup& h);

/// <a, b> = (1/|G|) sum_g a(g) conj(b(g)). Throws ConsistencyError when the result is
/// not an algebraic integer.
Cyclotomic inner_product(const GroupTable& g, const ClassFunction& a, const ClassFunction& b);

/// Multiplicity of each irreducible in `f`. Throws ValidationError when some
/// multiplicity is negative or non-integral, or the reconstruction fails.
std::vector<std::int64_t> decompose(const ClassFunction& f, const CharacterTable& table);

/// Irreducible constituents of an induced character that avoid given elements.
/// Precomputes chi^G and its decomposition once so repeated queries are cheap.
class ConstituentFinder {
 public:
  ConstituentFinder(TablePtr g_table, const Subgroup& h, const CharacterTable& h_table, std::size_t chi);

  const ClassFunction& induced() const noexcept { return induced_; }
  const std::vector<std::int64_t>& multiplicities() const noexcept { return multiplicities_; }
  /// Elements of H (as G elements) lying in Ker(chi).
  const ElementSet& subgroup_kernel() const noexcept { return h_kernel_; }
  bool induced_vanishes_at(Element g) const;

  /// First constituent phi (table order) with avoid ∩ Ker(phi) = ∅ and, when given,
  /// extra ∉ Ker(phi). Preconditions: avoid ⊆ H, avoid ∩ Ker(chi) = ∅, chi^G(extra) = 0
  /// (DomainError otherwise). Throws ConsistencyError if no constituent qualifies.
  std::size_t find(std::span<const Element> avoid, std::optional<Element> extra = std::nullopt) const;

 private:
  TablePtr g_table_;
  ElementSet h_elements_;
  ElementSet h_kernel_;
  ClassFunction induced_;
  std::vector<std::int64_t> multiplicities_;
  std::vector<ElementSet> kernels_;
};

std::size_t find_constituent_avoiding(TablePtr g_table, const Subgroup& h, const CharacterTable& h_table,
                                      std::size_t chi, std::span<const Element> avoid,
                                      std::optional<Element> extra = std::nullopt);

/// Exact verification of a table: degree sum of squares, row and column orthogonality,
/// row sums of multiplicity vectors and power-map consistency.
struct TableCheck {
  bool degrees = false;
  bool rows = false;
  bool columns = false;
  bool multiplicities = false;
  bool power_maps = false;
  std::string detail;
  bool ok() const noexcept { return degrees && rows && columns && multiplicities && power_maps; }
};
TableCheck verify_table(const CharacterTable& table);

}  // namespace isoprod
