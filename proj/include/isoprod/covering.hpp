#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isoprod/characters.hpp"
#include "isoprod/errors.hpp"
#include "isoprod/group.hpp"

namespace isoprod {

/// Branching datum (b; m_1, ..., m_r) realised by elements (alpha_j, beta_j; gamma_i)
/// with prod [alpha_j, beta_j] * prod gamma_i = 1 that generate the group.
struct GeneratingVector {
  GroupPtr group;
  std::uint32_t base_genus = 0;
  std::vector<Element> alphas;
  std::vector<Element> betas;
  std::vector<Element> gammas;

  /// m_i = |gamma_i|.
  std::vector<std::uint32_t> branch_orders() const;
  std::size_t branch_points() const noexcept { return gammas.size(); }
};

struct BranchedCover {
  GeneratingVector vector;
  std::int64_t genus = 0;
};

enum class VectorDefect {
  malformed,          // wrong number of alphas/betas, missing group
  out_of_range,       // element index outside the group
  trivial_branch,     // some gamma_i is the identity
  relation,           // long relation violated
  not_generating,     // elements generate a proper subgroup
  non_integral_genus  // Riemann-Hurwitz does not give a non-negative integer
};

std::string to_string(VectorDefect d);

class VectorError : public ValidationError {
 public:
  VectorError(VectorDefect defect, const std::string& what) : ValidationError(what), defect_(defect) {}
  VectorDefect defect() const noexcept { return defect_; }

 private:
  VectorDefect defect_;
};

/// 2g - 2 = |G|(2b - 2) + sum_i (|G| - |G|/m_i). Returns nullopt when g is not a
/// non-negative integer.
std::optional<std::int64_t> hurwitz_genus(std::size_t order, std::uint32_t base_genus,
                                          const std::vector<std::uint32_t>& branch_orders);

/// Checks the relation, the orders and generation, then computes the genus.
/// Throws VectorError naming the first defect found.
BranchedCover validate_vector(const GeneratingVector& v);

/// Union of all conjugates of the cyclic groups <gamma_i>, plus the identity.
ElementSet stabilizer_union(const GeneratingVector& v);

/// Multiplicity of chi in H^1(C, C): chi(1)(2b - 2 + r) - sum_i l_{gamma_i}(chi) for
/// nontrivial chi, 2b for the trivial character. Throws ConsistencyError if negative.
std::int64_t broughton_multiplicity(const BranchedCover& cover, const CharacterTable& table, std::size_t chi);

/// dim H^1(C, C)^chi, the isotypic dimension chi(1) * multiplicity (2b for the trivial
/// character).
std::int64_t broughton_dimension(const BranchedCover& cover, const CharacterTable& table, std::size_t chi);

/// broughton_dimension for every character of the table, in table order.
std::vector<std::int64_t> isotypic_dimensions(const BranchedCover& cover, const CharacterTable& table);

enum class DedupMode { none, automorphisms, fingerprint };

struct EnumerationOptions {
  std::uint32_t base_genus = 1;
  std::uint32_t max_r = 4;
  /// When set, only vectors of exactly this ordered type (m_1, ..., m_r) are produced
  /// and max_r is ignored.
  std::optional<std::vector<std::uint32_t>> branch_orders;
  /// Largest allowed m_i when branch_orders is not given; 0 means unbounded.
  std::uint32_t max_branch_order = 0;
  std::int64_t genus_cap = 65;
  std::int64_t min_genus = 2;
  bool dedup = false;
  /// Stop after this many emitted covers and report truncation; 0 means unbounded.
  std::uint64_t max_results = 0;
};

struct EnumerationResult {
  std::uint64_t count = 0;
  bool truncated = false;
  DedupMode dedup = DedupMode::none;
};

/// Largest group order for which dedup uses automorphism orbits.
inline constexpr std::size_t kAutomorphismDedupLimit = 32;

/// Every valid generating vector within the options, in a fixed order: alpha/beta tuples
/// outermost, then r ascending, then gamma tuples lexicographically by element index.
/// The visitor may return false to stop early (reported as truncation).
EnumerationResult enumerate_vectors(const GroupPtr& group, const EnumerationOptions& options,
                                    const std::function<bool(const BranchedCover&)>& visitor);

/// Branching data for the classification sweep. Every quantity the sweep derives from a
/// vector depends only on b and the multiset of gamma_i, so one witness vector is kept per
/// realisable multiset: gammas in the first ordering (from the sorted one) that admits a
/// witness, with the lexicographically first alpha/beta completion.
struct BranchDataOptions {
  std::uint32_t base_genus = 1;
  std::uint32_t r = 0;
  std::uint32_t max_branch_order = 0;  // 0 means unbounded
  std::int64_t genus_cap = 65;
  std::int64_t min_genus = 2;
};

std::vector<BranchedCover> enumerate_branch_data(const GroupPtr& group, const BranchDataOptions& options);

}  // namespace isoprod
