#include "isoprod/covering.hpp"

#include <algorithm>

namespace isoprod {

std::vector<std::uint32_t> GeneratingVector::branch_orders() const {
  std::vector<std::uint32_t> out;
  out.reserve(gammas.size());
  for (Element g : gammas) out.push_back(group->element_order(g));
  return out;
}

std::string to_string(VectorDefect d) {
  switch (d) {
    case VectorDefect::malformed: return "malformed";
    case VectorDefect::out_of_range: return "out_of_range";
    case VectorDefect::trivial_branch: return "trivial_branch";
    case VectorDefect::relation: return "relation";
    case VectorDefect::not_generating: return "not_generating";
    case VectorDefect::non_integral_genus: return "non_integral_genus";
  }
  return "unknown";
}

std::optional<std::int64_t> hurwitz_genus(std::size_t order, std::uint32_t base_genus,
                                          const std::vector<std::uint32_t>& branch_orders) {
  const auto n = static_cast<std::int64_t>(order);
  std::int64_t twice = n * (2 * static_cast<std::int64_t>(base_genus) - 2);
  for (auto m : branch_orders) {
    if (m == 0 || n % m != 0) return std::nullopt;
    twice += n - n / m;
  }
  // twice = 2g - 2
  if (twice < -2 || (twice % 2) != 0) return std::nullopt;
  return twice / 2 + 1;
}

BranchedCover validate_vector(const GeneratingVector& v) {
  if (!v.group) throw VectorError(VectorDefect::malformed, "generating vector has no group");
  const GroupTable& g = *v.group;
  if (v.alphas.size() != v.base_genus || v.betas.size() != v.base_genus)
    throw VectorError(VectorDefect::malformed, "expected " + std::to_string(v.base_genus) +
                                                   " alphas and betas, got " + std::to_string(v.alphas.size()) +
                                                   " and " + std::to_string(v.betas.size()));
  auto check_range = [&](const std::vector<Element>& xs, const char* what) {
    for (Element x : xs)
      if (x >= g.order())
        throw VectorError(VectorDefect::out_of_range,
                          std::string(what) + " element " + std::to_string(x) + " is outside '" + g.spec() + "'");
  };
  check_range(v.alphas, "alpha");
  check_range(v.betas, "beta");
  check_range(v.gammas, "gamma");
  for (std::size_t i = 0; i < v.gammas.size(); ++i)
    if (v.gammas[i] == g.identity())
      throw VectorError(VectorDefect::trivial_branch, "gamma_" + std::to_string(i + 1) + " is the identity");

  Element prod = g.identity();
  for (std::size_t j = 0; j < v.base_genus; ++j) prod = g.mul(prod, g.commutator(v.alphas[j], v.betas[j]));
  for (Element x : v.gammas) prod = g.mul(prod, x);
  if (prod != g.identity())
    throw VectorError(VectorDefect::relation, "long relation fails: product is " + g.label(prod));

  std::vector<Element> gens = v.alphas;
  gens.insert(gens.end(), v.betas.begin(), v.betas.end());
  gens.insert(gens.end(), v.gammas.begin(), v.gammas.end());
  auto span = generated_subgroup(g, gens);
  if (span.size() != g.order())
    throw VectorError(VectorDefect::not_generating, "elements generate a subgroup of order " +
                                                        std::to_string(span.size()) + " in '" + g.spec() + "'");

  auto genus = hurwitz_genus(g.order(), v.base_genus, v.branch_orders());
  if (!genus) throw VectorError(VectorDefect::non_integral_genus, "Riemann-Hurwitz gives no integral genus");
  return BranchedCover{v, *genus};
}

ElementSet stabilizer_union(const GeneratingVector& v) {
  const GroupTable& g = *v.group;
  ElementSet out(g.order());
  out.insert(g.identity());
  std::vector<bool> seen(g.class_count(), false);
  for (Element gamma : v.gammas) {
    Element p = gamma;
    while (p != g.identity()) {
      auto c = g.class_of(p);
      if (!seen[c]) {
        seen[c] = true;
        for (Element y : g.classes()[c].members) out.insert(y);
      }
      p = g.mul(p, gamma);
    }
  }
  return out;
}

std::int64_t broughton_multiplicity(const BranchedCover& cover, const CharacterTable& table, std::size_t chi) {
  const auto& v = cover.vector;
  const auto b = static_cast<std::int64_t>(v.base_genus);
  if (chi == CharacterTable::trivial_index()) return 2 * b;
  const Character& c = table[chi];
  std::int64_t value = static_cast<std::int64_t>(c.degree) * (2 * b - 2 + static_cast<std::int64_t>(v.gammas.size()));
  for (Element x : v.gammas) value -= trivial_multiplicity_on_cyclic(table.group(), c, x);
  if (value < 0)
    throw ConsistencyError("negative Broughton multiplicity " + std::to_string(value) + " for character " +
                           std::to_string(chi) + " of '" + table.group().spec() + "'");
  return value;
}

std::int64_t broughton_dimension(const BranchedCover& cover, const CharacterTable& table, std::size_t chi) {
  return static_cast<std::int64_t>(table[chi].degree) * broughton_multiplicity(cover, table, chi);
}

std::vector<std::int64_t> isotypic_dimensions(const BranchedCover& cover, const CharacterTable& table) {
  std::vector<std::int64_t> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out[i] = broughton_dimension(cover, table, i);
  return out;
}

}  // namespace isoprod
