#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "isoprod/surface.hpp"

namespace isoprod {

/// True iff sigma lies in Ker(chi) for every chi with H^1(C)^chi != 0 and
/// H^1(D)^conj(chi) != 0. Throws DomainError when sigma is not central.
bool acts_trivially(const UnmixedSurface& s, Element sigma);

/// Central elements acting trivially on cohomology.
ElementSet compute_aut0(const UnmixedSurface& s);

/// Same computation from precomputed data: centre ∩ the kernels of every chi with
/// dims_C[chi] > 0 and dims_D[conj chi] > 0.
ElementSet aut0_from_dimensions(const CharacterTable& table, const ElementSet& centre,
                                const std::vector<ElementSet>& kernels, const std::vector<std::int64_t>& dims_C,
                                const std::vector<std::int64_t>& dims_D);

struct Conformance {
  bool conforms = false;
  std::string reason;  // first failed clause, or "conforms"
  Element sigma1 = 0;  // common branch element of the first vector (when defined)
  Element tau1 = 0;    // common branch element of the second vector (when defined)
};

struct ClassificationRecord {
  UnmixedSurface surface;
  ElementSet aut0;
  Conformance conformance;  // only evaluated when aut0 is nontrivial
};

/// Tests the expected shape of a surface with nontrivial aut0: G abelian of type
/// Z_2m + Z_2mn or Z_2 + Z_2m + Z_2mn, both base genera 1, all branch elements of each
/// vector equal to one involution (sigma1 for C, tau1 for D, distinct), r and s even,
/// and aut0 = {1, sigma1 tau1}. Throws DomainError when aut0 is trivial.
Conformance check_conformance(const UnmixedSurface& s, const ElementSet& aut0);
Conformance check_conformance(const ClassificationRecord& rec);

struct SearchBounds {
  std::size_t max_group_order = 16;
  std::uint32_t max_r = 4;
  std::uint32_t max_s = 4;
  std::uint32_t max_branch_order = 8;
  std::int64_t genus_cap = 33;
  std::int64_t min_genus = 2;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> base_genera{{1, 1}};
};

/// Throws UsageError when the bounds are out of range.
void validate_bounds(const SearchBounds& bounds);

/// The built-in groups of order at most bounds.max_group_order.
std::vector<std::string> default_groups(const SearchBounds& bounds);

enum class RecordFilter { none, nontrivial, all };

struct ClassifyOptions {
  unsigned workers = 1;
  RecordFilter records = RecordFilter::nontrivial;
  /// Reduce the first vector to one representative per automorphism orbit of its branch
  /// multiset when the automorphism group is computable.
  bool reduce_by_automorphisms = true;
};

struct ClassifySummary {
  std::uint64_t groups = 0;
  std::uint64_t covers = 0;               // branch data representatives examined
  std::uint64_t pairs = 0;                // (vC, vD) pairs examined
  std::uint64_t non_free = 0;             // pairs rejected by the freeness test
  std::uint64_t surfaces = 0;
  std::uint64_t nontrivial_aut0 = 0;
  std::uint64_t conformance_failures = 0;
  std::uint64_t errors = 0;
  // invariant checks run on every cover or surface
  std::uint64_t dimension_sum_failures = 0;   // sum of isotypic dimensions != 2g
  std::uint64_t aut0_not_subgroup = 0;
  std::uint64_t aut0_swap_mismatches = 0;     // aut0 changes when the factors are swapped
  std::uint64_t q2_aut0_above_two = 0;        // q = 2 and |aut0| > 2
  std::uint64_t genus2_base_nontrivial = 0;   // a base of genus 2 and nontrivial aut0
  std::uint64_t max_aut0_order = 1;
  std::vector<std::string> error_messages;    // first few, for reporting

  bool invariants_hold() const noexcept {
    return dimension_sum_failures == 0 && aut0_not_subgroup == 0 && aut0_swap_mismatches == 0 &&
           q2_aut0_above_two == 0 && genus2_base_nontrivial == 0;
  }
};

/// Runs the sweep over `groups` (specs, built with an order cap of at least
/// bounds.max_group_order). Records are passed to `sink` in a deterministic order:
/// group, base genera, r, s, first vector, second vector. Per-surface errors are counted
/// and never abort the run.
ClassifySummary classify_all(const SearchBounds& bounds, const std::vector<std::string>& groups,
                             const ClassifyOptions& options,
                             const std::function<void(const ClassificationRecord&)>& sink);

}  // namespace isoprod
