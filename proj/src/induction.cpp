#include <algorithm>

#include "isoprod/characters.hpp"
#include "isoprod/errors.hpp"

namespace isoprod {

ClassFunction as_class_function(const CharacterTable& table, std::size_t chi) {
  ClassFunction f;
  f.exponent = table.exponent();
  for (std::size_t c = 0; c < table.group().class_count(); ++c) f.values.push_back(table.value(chi, c));
  return f;
}

ClassFunction as_class_function(const CharacterTable& table, std::size_t chi, std::uint32_t exponent) {
  ClassFunction f = as_class_function(table, chi);
  if (exponent == f.exponent) return f;
  for (auto& v : f.values) v = v.embed(exponent);
  f.exponent = exponent;
  return f;
}

ClassFunction induced_character(const GroupTable& g, const Subgroup& h, const CharacterTable& h_table,
                                std::size_t chi) {
  if (!is_subgroup(g, h.elements)) throw DomainError("induction from a subset that is not a subgroup");
  const std::uint32_t e = g.exponent();
  const std::uint32_t eh = h_table.exponent();
  if (e % eh != 0) throw DomainError("subgroup exponent does not divide the group exponent");
  const std::uint32_t step = e / eh;
  const auto& values = h_table[chi].values;
  const auto& hg = *h.table;
  const auto n = static_cast<std::int64_t>(g.order());
  const auto nh = static_cast<std::int64_t>(hg.order());

  ClassFunction f;
  f.exponent = e;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    // sum_t chi°(t x t^-1) = |C_G(x)| * sum over y in cl(x) ∩ H of chi(y)
    std::vector<std::int64_t> acc(e, 0);
    for (Element y : g.classes()[c].members) {
      auto idx = h.from_parent[y];
      if (idx < 0) continue;
      const auto& m = values[hg.class_of(static_cast<Element>(idx))];
      for (std::uint32_t k = 0; k < eh; ++k) acc[k * step] += m[k];
    }
    Cyclotomic v = Cyclotomic::from_powers(e, acc) * n;
    f.values.push_back(v.divided_by(static_cast<std::int64_t>(g.class_size(c)) * nh));
  }
  return f;
}

ClassFunction restrict_character(const CharacterTable& g_table, std::size_t phi, const Subgroup& h) {
  const GroupTable& g = g_table.group();
  const auto& hg = *h.table;
  ClassFunction f;
  f.exponent = g.exponent();
  for (const auto& cls : hg.classes())
    f.values.push_back(g_table.value(phi, g.class_of(h.to_parent[cls.representative])));
  return f;
}

Cyclotomic inner_product(const GroupTable& g, const ClassFunction& a, const ClassFunction& b) {
  if (a.exponent != b.exponent) throw DomainError("class functions live in different cyclotomic fields");
  if (a.values.size() != g.class_count() || b.values.size() != g.class_count())
    throw DomainError("class function length differs from the class count");
  Cyclotomic acc(a.exponent);
  for (std::size_t c = 0; c < g.class_count(); ++c)
    acc += (a.values[c] * b.values[c].conj()) * static_cast<std::int64_t>(g.class_size(c));
  return acc.divided_by(static_cast<std::int64_t>(g.order()));
}

std::vector<std::int64_t> decompose(const ClassFunction& f, const CharacterTable& table) {
  const GroupTable& g = table.group();
  if (f.exponent % table.exponent() != 0)
    throw DomainError("class function field does not contain the character values");
  std::vector<std::int64_t> out;
  std::vector<ClassFunction> irr;
  for (std::size_t i = 0; i < table.size(); ++i) {
    irr.push_back(as_class_function(table, i, f.exponent));
    Cyclotomic ip(f.exponent);
    try {
      ip = inner_product(g, f, irr.back());
    } catch (const ConsistencyError&) {
      throw ValidationError("class function has a non-integral multiplicity against character " + std::to_string(i));
    }
    if (!ip.is_rational() || ip.coefficients()[0] < 0)
      throw ValidationError("class function is not a character: multiplicity " + ip.to_string() + " against character " +
                            std::to_string(i));
    out.push_back(ip.coefficients()[0]);
  }
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    Cyclotomic sum(f.exponent);
    for (std::size_t i = 0; i < table.size(); ++i)
      if (out[i] != 0) sum += irr[i].values[c] * out[i];
    if (sum != f.values[c]) throw ValidationError("decomposition does not reconstruct the class function");
  }
  return out;
}

ConstituentFinder::ConstituentFinder(TablePtr g_table, const Subgroup& h, const CharacterTable& h_table,
                                     std::size_t chi)
    : g_table_(std::move(g_table)), h_elements_(h.elements) {
  const GroupTable& g = g_table_->group();
  induced_ = induced_character(g, h, h_table, chi);
  multiplicities_ = decompose(induced_, *g_table_);
  h_kernel_ = ElementSet(g.order());
  for (Element y : kernel(*h.table, h_table[chi]).elements()) h_kernel_.insert(h.to_parent[y]);
  for (const auto& phi : g_table_->characters()) kernels_.push_back(kernel(g, phi));
}

bool ConstituentFinder::induced_vanishes_at(Element x) const {
  return induced_.values[g_table_->group().class_of(x)].is_zero();
}

std::size_t ConstituentFinder::find(std::span<const Element> avoid, std::optional<Element> extra) const {
  for (Element x : avoid) {
    if (!h_elements_.contains(x)) throw DomainError("avoided element " + std::to_string(x) + " is not in the subgroup");
    if (h_kernel_.contains(x))
      throw DomainError("avoided element " + std::to_string(x) + " lies in the kernel of the subgroup character");
  }
  if (extra && !induced_vanishes_at(*extra))
    throw DomainError("induced character does not vanish at element " + std::to_string(*extra));
  for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
    if (multiplicities_[i] == 0) continue;
    const auto& k = kernels_[i];
    bool ok = std::none_of(avoid.begin(), avoid.end(), [&](Element x) { return k.contains(x); });
    if (ok && extra) ok = !k.contains(*extra);
    if (ok) return i;
  }
  throw ConsistencyError("no irreducible constituent of the induced character avoids the given elements");
}

std::size_t find_constituent_avoiding(TablePtr g_table, const Subgroup& h, const CharacterTable& h_table,
                                      std::size_t chi, std::span<const Element> avoid, std::optional<Element> extra) {
  return ConstituentFinder(std::move(g_table), h, h_table, chi).find(avoid, extra);
}

}  // namespace isoprod
