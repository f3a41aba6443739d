#pragma once

#include <cstdint>
#include <vector>

#include "isoprod/characters.hpp"
#include "isoprod/covering.hpp"

namespace isoprod {

struct SurfaceInvariants {
  std::int64_t q = 0;
  std::int64_t pg = 0;
  std::int64_t chi = 0;
  std::int64_t K2 = 0;
  std::int64_t euler = 0;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  /// Dimension of the diagonal-invariant part of H^1(C)^chi (x) H^1(D)^conj(chi), per
  /// character index.
  std::vector<std::int64_t> h2_summands;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// A cover together with the data the surface computations need repeatedly.
struct CoverProfile {
  BranchedCover cover;
  ElementSet stabilizers;           // stabilizer_union
  std::vector<std::int64_t> dims;   // isotypic dimensions, table order
};

CoverProfile make_profile(const BranchedCover& cover, const CharacterTable& table);

/// The diagonal action is not free: `witness` is a nontrivial element of both
/// stabilizer unions.
class FreenessError : public ValidationError {
 public:
  FreenessError(Element witness, const std::string& what) : ValidationError(what), witness_(witness) {}
  Element witness() const noexcept { return witness_; }

 private:
  Element witness_;
};

/// (C x D)/G for a pair of covers of the same group with free diagonal action.
struct UnmixedSurface {
  GroupPtr group;
  TablePtr table;
  BranchedCover cover_C;
  BranchedCover cover_D;
  std::vector<std::int64_t> h1_C;  // dim H^1(C)^chi per character
  std::vector<std::int64_t> h1_D;
  SurfaceInvariants invariants;
};

/// Validates both vectors, checks freeness and g >= 2 on both factors and fills in the
/// invariants. Throws VectorError, FreenessError, DomainError (genus below two) or
/// ConsistencyError (an invariant identity fails).
UnmixedSurface build_surface(const GeneratingVector& vC, const GeneratingVector& vD);
UnmixedSurface build_surface(const CoverProfile& c, const CoverProfile& d, const TablePtr& table);

/// Nontrivial element of Sigma_1 ∩ Sigma_2, if any.
std::optional<Element> freeness_witness(const ElementSet& sigma1, const ElementSet& sigma2);

/// Invariants of the surface built from two free covers: q, chi, p_g, K^2, e, b1 and b2
/// both from the H^2 decomposition and from the Euler number (they must agree).
SurfaceInvariants surface_invariants(const CharacterTable& table, const CoverProfile& c, const CoverProfile& d);

/// Recomputes the H^2 decomposition of a built surface.
SurfaceInvariants h2_decomposition(const UnmixedSurface& s);

enum class ExplicitFamily { z2m_z2mn, z2_z2m_z2mn };

struct FamilySurface {
  UnmixedSurface surface;
  Element gamma = 0;        // common branch element of the first vector
  Element gamma_prime = 0;  // common branch element of the second vector
};

/// The explicit family: G = Z_2m + Z_2mn with V = (a, b; a^m x 2k), V' = (a, b; b^mn x 2l),
/// or G = Z_2 + Z_2m + Z_2mn with V = (mu, nu; lambda x 2k), V' = (mu, nu; lambda mu^m x 2l).
/// Throws SizeError when |G| exceeds `order_cap`, DomainError for non-positive parameters.
FamilySurface explicit_family_construct(ExplicitFamily family, std::uint32_t m, std::uint32_t n, std::uint32_t k,
                              std::uint32_t l, std::size_t order_cap = kDefaultOrderCap);

std::string explicit_family_group_spec(ExplicitFamily family, std::uint32_t m, std::uint32_t n);

}  // namespace isoprod
