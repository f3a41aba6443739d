#include "isoprod/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "isoprod/errors.hpp"

namespace isoprod {

namespace {

void check_latin_and_associative(std::size_t n, const std::vector<Element>& t) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      Element v = t[r * n + c];
      if (seen[v] == stamp)
        throw ConstructionError("table is not a Latin square: row " + std::to_string(r) + " repeats " +
                                std::to_string(v));
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      Element v = t[r * n + c];
      if (seen[v] == stamp)
        throw ConstructionError("table is not a Latin square: column " + std::to_string(c) + " repeats " +
                                std::to_string(v));
      seen[v] = stamp;
    }
  }
  auto assoc_fails = [&](std::size_t a, std::size_t b, std::size_t c) {
    return t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]];
  };
  auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw ConstructionError("table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(c) + ")");
  };
  if (n <= kFullAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (assoc_fails(a, b, c)) fail(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 1'000'000; ++i) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (assoc_fails(a, b, c)) fail(a, b, c);
    }
  }
}

}  // namespace

GroupTable::GroupTable(std::string spec, std::size_t order, std::vector<Element> table,
                       std::vector<std::string> labels)
    : spec_(std::move(spec)), order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ == 0) throw ConstructionError("group order must be positive");
  if (table_.size() != order_ * order_)
    throw ConstructionError("table has " + std::to_string(table_.size()) + " entries, expected " +
                            std::to_string(order_ * order_));
  for (Element v : table_)
    if (v >= order_) throw ConstructionError("table entry " + std::to_string(v) + " out of range");
  if (labels_.empty()) {
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back("g" + std::to_string(i));
  }
  if (labels_.size() != order_) throw ConstructionError("label count does not match the group order");

  std::optional<Element> id;
  for (std::size_t e = 0; e < order_ && !id; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order_ && ok; ++g)
      ok = table_[e * order_ + g] == g && table_[g * order_ + e] == g;
    if (ok) id = static_cast<Element>(e);
  }
  if (!id) throw ConstructionError("table has no two-sided identity");

  validate();

  if (*id != 0) {
    // Swap labels 0 and id so the identity sits at index 0.
    Element a = 0, b = *id;
    auto relabel = [&](Element x) { return x == a ? b : (x == b ? a : x); };
    std::vector<Element> t(order_ * order_);
    for (std::size_t r = 0; r < order_; ++r)
      for (std::size_t c = 0; c < order_; ++c)
        t[relabel(static_cast<Element>(r)) * order_ + relabel(static_cast<Element>(c))] =
            relabel(table_[r * order_ + c]);
    table_ = std::move(t);
    std::swap(labels_[a], labels_[b]);
  }
  precompute();
}

void GroupTable::validate() const { check_latin_and_associative(order_, table_); }

void GroupTable::precompute() {
  const std::size_t n = order_;
  inverse_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (table_[g * n + h] == 0) {
        inverse_[g] = static_cast<Element>(h);
        break;
      }

  element_order_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t g = 0; g < n; ++g) {
    Element x = static_cast<Element>(g);
    std::uint32_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<Element>(g));
      ++k;
    }
    element_order_[g] = k;
    exponent_ = std::lcm(exponent_, k);
  }

  abelian_ = true;
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = a + 1; b < n && abelian_; ++b)
      if (table_[a * n + b] != table_[b * n + a]) abelian_ = false;

  std::vector<bool> done(n, false);
  classes_.clear();
  for (std::size_t g = 0; g < n; ++g) {
    if (done[g]) continue;
    ConjugacyClass cls;
    std::vector<bool> in(n, false);
    for (std::size_t t = 0; t < n; ++t) {
      Element c = conjugate(static_cast<Element>(g), static_cast<Element>(t));
      if (!in[c]) {
        in[c] = true;
        done[c] = true;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    classes_.push_back(std::move(cls));
  }
  std::sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& x, const ConjugacyClass& y) {
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return x.representative < y.representative;
  });
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (Element m : classes_[c].members) class_of_[m] = c;

  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (16 * i)) & 0xffff;
      h *= 0x100000001b3ull;
    }
  };
  mix(n);
  for (Element v : table_) mix(v);
  table_hash_ = h;
}

Element GroupTable::pow(Element a, std::int64_t k) const noexcept {
  std::int64_t ord = element_order_[a];
  k %= ord;
  if (k < 0) k += ord;
  Element r = 0, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::optional<Element> GroupTable::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < order_; ++i)
    if (labels_[i] == label) return static_cast<Element>(i);
  return std::nullopt;
}

const std::vector<ConjugacyClass>& conjugacy_classes(const GroupTable& g) { return g.classes(); }

ElementSet center(const GroupTable& g) {
  ElementSet z(g.order());
  for (const auto& cls : g.classes())
    if (cls.members.size() == 1) z.insert(cls.representative);
  return z;
}

ElementSet generated_subgroup(const GroupTable& g, const std::vector<Element>& gens) {
  ElementSet s(g.order());
  s.insert(0);
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element y : gens) {
      Element z = g.mul(x, y);
      if (!s.contains(z)) {
        s.insert(z);
        frontier.push_back(z);
      }
    }
  }
  return s;
}

ElementSet commutator_subgroup(const GroupTable& g) {
  ElementSet comms(g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      comms.insert(g.commutator(static_cast<Element>(a), static_cast<Element>(b)));
  return generated_subgroup(g, comms.elements());
}

ElementSet cyclic_subgroup(const GroupTable& g, Element x) {
  ElementSet s(g.order());
  Element p = 0;
  do {
    s.insert(p);
    p = g.mul(p, x);
  } while (p != 0);
  return s;
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  auto members = s.elements();
  for (Element a : members) {
    if (!s.contains(g.inverse(a))) return false;
    for (Element b : members)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (Element a : s.elements())
    for (std::size_t t = 0; t < g.order(); ++t)
      if (!s.contains(g.conjugate(a, static_cast<Element>(t)))) return false;
  return true;
}

AbelianInvariants abelian_invariants(const GroupTable& g) {
  if (!g.is_abelian()) throw DomainError("abelian_invariants: group '" + g.spec() + "' is not abelian");
  // For each prime p, the number of elements with x^(p^k) = 1 determines the
  // partition of the p-primary part; the invariant factors are products of the
  // largest remaining prime powers.
  std::size_t n = g.order();
  std::vector<std::uint32_t> primes;
  {
    std::size_t m = n;
    for (std::uint32_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(static_cast<std::uint32_t>(m));
  }
  std::vector<std::vector<std::uint32_t>> prime_power_parts;  // per prime: descending exponents' prime powers
  for (std::uint32_t p : primes) {
    // count[k] = #{x : x^(p^k) = 1}
    std::vector<std::size_t> count{1};
    std::uint64_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t c = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (pk % g.element_order(static_cast<Element>(x)) == 0) ++c;
      count.push_back(c);
      if (c == count[count.size() - 2]) break;
    }
    count.pop_back();
    // log_p(count[k] / count[k-1]) = number of cyclic factors of order >= p^k.
    std::vector<int> at_least;
    for (std::size_t k = 1; k < count.size(); ++k) {
      std::size_t ratio = count[k] / count[k - 1];
      int e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      at_least.push_back(e);
    }
    std::vector<std::uint32_t> powers;  // descending
    for (std::size_t k = at_least.size(); k-- > 0;) {
      int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      std::uint32_t q = 1;
      for (std::size_t i = 0; i <= k; ++i) q *= p;
      for (int i = 0; i < exactly; ++i) powers.push_back(q);
    }
    prime_power_parts.push_back(std::move(powers));
  }
  std::size_t t = 0;
  for (const auto& part : prime_power_parts) t = std::max(t, part.size());
  std::vector<std::uint32_t> factors(t, 1);
  // Largest factor collects the largest power of every prime.
  for (const auto& part : prime_power_parts)
    for (std::size_t i = 0; i < part.size(); ++i) factors[t - 1 - i] *= part[i];
  return AbelianInvariants{factors};
}

std::string fingerprint(const GroupTable& g) {
  std::ostringstream os;
  os << "n" << g.order() << ";c";
  for (std::size_t c = 0; c < g.class_count(); ++c) os << (c ? "," : "") << g.class_size(c);
  std::map<std::uint32_t, std::size_t> census;
  for (std::size_t x = 0; x < g.order(); ++x) ++census[g.element_order(static_cast<Element>(x))];
  os << ";o";
  bool first = true;
  for (auto [ord, cnt] : census) {
    os << (first ? "" : ",") << ord << ":" << cnt;
    first = false;
  }
  return os.str();
}

std::vector<Element> generating_set(const GroupTable& g) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  ElementSet span = generated_subgroup(g, gens);
  for (Element x : by_order) {
    if (span.size() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

std::optional<std::vector<std::vector<Element>>> automorphisms(const GroupTable& g, std::uint64_t work_limit) {
  const std::size_t n = g.order();
  auto gens = generating_set(g);
  std::vector<std::vector<Element>> candidates;
  std::uint64_t space = 1;
  for (Element x : gens) {
    std::vector<Element> c;
    for (std::size_t y = 0; y < n; ++y)
      if (g.element_order(static_cast<Element>(y)) == g.element_order(x)) c.push_back(static_cast<Element>(y));
    space *= c.size();
    if (space * n > work_limit) return std::nullopt;
    candidates.push_back(std::move(c));
  }

  // Words for every element: element = parent * gens[via].
  std::vector<Element> parent(n, 0), via(n, 0);
  std::vector<Element> bfs{0};
  {
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Element z = g.mul(bfs[i], gens[k]);
        if (!seen[z]) {
          seen[z] = true;
          parent[z] = bfs[i];
          via[z] = static_cast<Element>(k);
          bfs.push_back(z);
        }
      }
  }

  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Element> image(n);
  std::vector<bool> used(n);
  while (true) {
    image[0] = 0;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      Element z = bfs[i];
      image[z] = g.mul(image[parent[z]], candidates[via[z]][pick[via[z]]]);
    }
    bool ok = true;
    std::fill(used.begin(), used.end(), false);
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (used[image[x]]) ok = false;
      used[image[x]] = true;
    }
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t k = 0; k < gens.size() && ok; ++k)
        ok = image[g.mul(static_cast<Element>(x), gens[k])] == g.mul(image[x], candidates[k][pick[k]]);
    if (ok) out.push_back(image);

    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

}  // namespace isoprod
