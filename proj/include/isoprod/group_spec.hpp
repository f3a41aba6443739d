#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isoprod/group.hpp"

namespace isoprod {

struct BuildOptions {
  std::size_t order_cap = kDefaultOrderCap;
};

/// Builds a group from the specification mini-language:
///
///   ab:d1,d2,...        direct product of cyclic groups Z_d1 x Z_d2 x ...
///   dih:n               dihedral group of order 2n
///   quat:N              dicyclic group of order N (N divisible by 4, N >= 8);
///                       quat:8 is the quaternion group
///   sym:n | alt:n       symmetric / alternating group on n points
///   perm:(1 2 3)(4 5);(1 2)   permutation generators, 1-based cycle notation
///   cayley:<path>       JSON {"order": N, "table": [[...]]}, 0-based, row g column h = g*h
///
/// Throws UsageError for malformed specs, SizeError when the order exceeds the cap,
/// ConstructionError for tables that are not groups.
GroupPtr build_group(const std::string& spec, const BuildOptions& options = {});

GroupTable abelian_group(const std::vector<std::uint32_t>& factors);
GroupTable dihedral_group(std::uint32_t n);
GroupTable dicyclic_group(std::uint32_t order);
GroupTable symmetric_group(std::uint32_t n, std::size_t order_cap = kDefaultOrderCap);
GroupTable alternating_group(std::uint32_t n, std::size_t order_cap = kDefaultOrderCap);

using Permutation = std::vector<std::uint32_t>;  // 0-based images
/// Closes the generators under composition (x^(gh) = (x^g)^h) and tabulates the result.
GroupTable permutation_group(std::string spec, std::vector<Permutation> generators,
                             std::size_t order_cap = kDefaultOrderCap);
std::vector<Permutation> parse_permutations(const std::string& text);
std::string cycle_notation(const Permutation& p);

GroupTable group_from_cayley_file(const std::string& path);

/// Splits a comma separated list of specs; tokens without a family prefix continue
/// the previous spec, so "ab:2,4,sym:3" yields {"ab:2,4", "sym:3"}.
std::vector<std::string> split_group_list(const std::string& text);

/// Every built-in group of order <= max_order: all abelian groups (one spec per
/// invariant-factor chain), dih:n (n >= 3), quat:N, sym:n (n >= 3), alt:n (n >= 4).
std::vector<std::string> builtin_group_specs(std::size_t max_order);

}  // namespace isoprod
