#include "isoprod/characters.hpp"

#include <algorithm>
#include <numeric>

#include "isoprod/errors.hpp"

namespace isoprod {

bool is_trivial_character(const Character& chi) {
  if (chi.degree != 1) return false;
  for (const auto& v : chi.values)
    if (v.empty() || v[0] != 1) return false;
  return true;
}

Character conjugate_character(const Character& chi) {
  Character out = chi;
  for (auto& v : out.values) {
    const std::size_t e = v.size();
    std::vector<std::uint32_t> w(e);
    for (std::size_t k = 0; k < e; ++k) w[(e - k) % e] = v[k];
    v = std::move(w);
  }
  return out;
}

Cyclotomic character_value(const Character& chi, std::size_t cls) {
  const auto& v = chi.values[cls];
  std::vector<std::int64_t> powers(v.begin(), v.end());
  return Cyclotomic::from_powers(static_cast<std::uint32_t>(v.size()), powers);
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<Character> characters)
    : group_(std::move(group)), characters_(std::move(characters)) {
  const std::size_t k = group_->class_count();
  const std::uint32_t e = group_->exponent();
  if (characters_.size() != k)
    throw ConsistencyError("character table of '" + group_->spec() + "' has " + std::to_string(characters_.size()) +
                           " characters for " + std::to_string(k) + " classes");
  for (const auto& chi : characters_) {
    if (chi.values.size() != k) throw ConsistencyError("character has the wrong number of class values");
    for (const auto& v : chi.values)
      if (v.size() != e) throw ConsistencyError("multiplicity vector length differs from the group exponent");
  }
  std::sort(characters_.begin(), characters_.end(), [](const Character& a, const Character& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values > b.values;
  });
  conjugate_.resize(characters_.size());
  for (std::size_t i = 0; i < characters_.size(); ++i) {
    auto j = find(conjugate_character(characters_[i]));
    if (!j) throw ConsistencyError("character table of '" + group_->spec() + "' is not closed under conjugation");
    conjugate_[i] = *j;
  }
  if (!characters_.empty() && !is_trivial_character(characters_[0]))
    throw ConsistencyError("character table of '" + group_->spec() + "' lacks the trivial character");
}

std::optional<std::size_t> CharacterTable::find(const Character& chi) const {
  for (std::size_t i = 0; i < characters_.size(); ++i)
    if (characters_[i] == chi) return i;
  return std::nullopt;
}

CharacterTable character_table(const GroupPtr& group, TableMethod method) {
  const GroupTable& g = *group;
  bool use_abelian = method == TableMethod::abelian || (method == TableMethod::automatic && g.is_abelian());
  if (use_abelian && !g.is_abelian())
    throw DomainError("abelian character construction requested for non-abelian '" + g.spec() + "'");
  CharacterTable table(group, use_abelian ? abelian_characters(g) : dixon_characters(g));
  std::uint64_t sum = 0;
  for (const auto& chi : table.characters()) sum += std::uint64_t{chi.degree} * chi.degree;
  if (sum != g.order())
    throw ConsistencyError("character degrees of '" + g.spec() + "' square-sum to " + std::to_string(sum));
  return table;
}

ElementSet kernel(const GroupTable& g, const Character& chi) {
  ElementSet k(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (chi.values[g.class_of(static_cast<Element>(x))][0] == chi.degree) k.insert(static_cast<Element>(x));
  return k;
}

std::uint32_t trivial_multiplicity_on_cyclic(const GroupTable& g, const Character& chi, Element sigma) {
  // Summing chi(sigma^j) over the whole cyclic group annihilates every eigenvalue
  // except 1, so the average is the multiplicity of eigenvalue zeta^0.
  return chi.values[g.class_of(sigma)][0];
}

TableCheck verify_table(const CharacterTable& table) {
  const GroupTable& g = table.group();
  const std::size_t k = g.class_count();
  const std::uint32_t e = g.exponent();
  const auto n = static_cast<std::int64_t>(g.order());
  TableCheck out;

  std::int64_t sq = 0;
  for (const auto& chi : table.characters()) sq += std::int64_t{chi.degree} * chi.degree;
  out.degrees = sq == n && table.size() == k;
  if (!out.degrees) out.detail += "degree square sum " + std::to_string(sq) + "; ";

  out.multiplicities = true;
  for (const auto& chi : table.characters())
    for (std::size_t c = 0; c < k; ++c) {
      auto s = std::accumulate(chi.values[c].begin(), chi.values[c].end(), std::uint64_t{0});
      if (s != chi.degree) out.multiplicities = false;
    }
  for (const auto& chi : table.characters())
    if (chi.values[0][0] != chi.degree) out.multiplicities = false;
  if (!out.multiplicities) out.detail += "multiplicity rows do not sum to degrees; ";

  // Products chi(g) conj(psi(g)) accumulated in redundant power form, reduced once.
  auto product_powers = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                            std::int64_t weight, std::vector<std::int64_t>& acc) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < e; ++j)
        if (b[j] != 0) acc[(i + e - j) % e] += weight * a[i] * b[j];
    }
  };

  out.rows = true;
  for (std::size_t x = 0; x < table.size() && out.rows; ++x)
    for (std::size_t y = 0; y < table.size() && out.rows; ++y) {
      std::vector<std::int64_t> acc(e, 0);
      for (std::size_t c = 0; c < k; ++c)
        product_powers(table[x].values[c], table[y].values[c], static_cast<std::int64_t>(g.class_size(c)), acc);
      Cyclotomic v = Cyclotomic::from_powers(e, acc);
      if (v != Cyclotomic::integer(e, x == y ? n : 0)) {
        out.rows = false;
        out.detail += "row orthogonality fails for (" + std::to_string(x) + "," + std::to_string(y) + "); ";
      }
    }

  out.columns = true;
  for (std::size_t a = 0; a < k && out.columns; ++a)
    for (std::size_t b = 0; b < k && out.columns; ++b) {
      std::vector<std::int64_t> acc(e, 0);
      for (const auto& chi : table.characters()) product_powers(chi.values[a], chi.values[b], 1, acc);
      Cyclotomic v = Cyclotomic::from_powers(e, acc);
      auto expect = a == b ? n / static_cast<std::int64_t>(g.class_size(a)) : 0;
      if (v != Cyclotomic::integer(e, expect)) {
        out.columns = false;
        out.detail += "column orthogonality fails for (" + std::to_string(a) + "," + std::to_string(b) + "); ";
      }
    }

  out.power_maps = true;
  for (const auto& chi : table.characters())
    for (std::size_t c = 0; c < k && out.power_maps; ++c) {
      Element rep = g.classes()[c].representative;
      for (std::uint32_t j = 0; j < e; ++j) {
        std::vector<std::uint32_t> mapped(e, 0);
        for (std::uint32_t i = 0; i < e; ++i)
          mapped[static_cast<std::uint64_t>(i) * j % e] += chi.values[c][i];
        if (mapped != chi.values[g.class_of(g.pow(rep, j))]) {
          out.power_maps = false;
          out.detail += "power map inconsistency; ";
          break;
        }
      }
    }
  return out;
}

}  // namespace isoprod
