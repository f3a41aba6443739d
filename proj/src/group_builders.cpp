#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "isoprod/errors.hpp"
#include "isoprod/group_spec.hpp"

namespace isoprod {

namespace {

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && ws(s.front())) s.erase(s.begin());
  while (!s.empty() && ws(s.back())) s.pop_back();
  return s;
}

std::uint32_t parse_positive(const std::string& token, const std::string& spec) {
  std::string t = trim(token);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }) || t.size() > 9)
    throw UsageError("invalid group spec '" + spec + "': bad number '" + token + "'");
  auto v = static_cast<std::uint32_t>(std::stoul(t));
  if (v == 0) throw UsageError("invalid group spec '" + spec + "': '" + token + "' must be positive");
  return v;
}

void check_cap(std::uint64_t order, std::size_t cap, const std::string& spec) {
  if (order > cap)
    throw SizeError("group '" + spec + "' has order " + std::to_string(order) + " above the cap " +
                    std::to_string(cap));
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > (1ull << 40)) break;
  }
  return f;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  // apply g first, then h
  Permutation r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = h[g[x]];
  return r;
}

}  // namespace

GroupTable abelian_group(const std::vector<std::uint32_t>& factors) {
  std::size_t n = 1;
  for (auto d : factors) n *= d;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  auto digits = [&](std::size_t x) {
    std::vector<std::uint32_t> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      c[i] = static_cast<std::uint32_t>(x % factors[i]);
      x /= factors[i];
    }
    return c;
  };
  for (std::size_t x = 0; x < n; ++x) {
    auto c = digits(x);
    std::string l = "(";
    for (std::size_t i = 0; i < c.size(); ++i) l += (i ? "," : "") + std::to_string(c[i]);
    labels[x] = l + ")";
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto cx = digits(x);
    for (std::size_t y = 0; y < n; ++y) {
      auto cy = digits(y);
      std::size_t z = 0, stride = 1;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        z += ((cx[i] + cy[i]) % factors[i]) * stride;
        stride *= factors[i];
      }
      table[x * n + y] = static_cast<Element>(z);
    }
  }
  std::string spec = "ab:";
  for (std::size_t i = 0; i < factors.size(); ++i) spec += (i ? "," : "") + std::to_string(factors[i]);
  if (factors.empty()) spec += "1";
  return GroupTable(spec, n, std::move(table), std::move(labels));
}

GroupTable dihedral_group(std::uint32_t n) {
  // r^i s^j  <->  i + n*j ;  (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
  const std::size_t order = 2 * std::size_t{n};
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) {
      std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      std::string l = r + (j ? (r.empty() ? "s" : " s") : "");
      labels[i + n * j] = l.empty() ? "1" : l;
    }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < 2; ++d) {
          std::uint32_t i = b == 0 ? (a + c) % n : (a + n - c) % n;
          table[(a + n * b) * order + (c + n * d)] = static_cast<Element>(i + n * ((b + d) % 2));
        }
  return GroupTable("dih:" + std::to_string(n), order, std::move(table), std::move(labels));
}

GroupTable dicyclic_group(std::uint32_t order) {
  // <x, y | x^(2k) = 1, y^2 = x^k, y x y^-1 = x^-1>,  x^a y^b  <->  a + 2k*b
  const std::uint32_t k = order / 4, m = 2 * k;
  std::vector<Element> table(std::size_t{order} * order);
  std::vector<std::string> labels(order);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) {
      std::string x = a == 0 ? "" : (a == 1 ? "x" : "x^" + std::to_string(a));
      std::string l = x + (b ? (x.empty() ? "y" : " y") : "");
      labels[a + m * b] = l.empty() ? "1" : l;
    }
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (std::uint32_t c = 0; c < m; ++c)
        for (std::uint32_t d = 0; d < 2; ++d) {
          std::uint32_t e, f;
          if (b == 0) {
            e = (a + c) % m;
            f = d;
          } else if (d == 0) {
            e = (a + m - c) % m;
            f = 1;
          } else {
            e = (a + m - c + k) % m;
            f = 0;
          }
          table[(a + m * b) * order + (c + m * d)] = static_cast<Element>(e + m * f);
        }
  return GroupTable("quat:" + std::to_string(order), order, std::move(table), std::move(labels));
}

GroupTable permutation_group(std::string spec, std::vector<Permutation> generators, std::size_t order_cap) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  for (auto& g : generators) {
    std::size_t old = g.size();
    g.resize(degree);
    for (std::size_t x = old; x < degree; ++x) g[x] = static_cast<std::uint32_t>(x);
  }
  Permutation id(degree);
  for (std::size_t x = 0; x < degree; ++x) id[x] = static_cast<std::uint32_t>(x);

  std::map<Permutation, Element> index;
  std::vector<Permutation> elems{id};
  index.emplace(id, 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) {
      Permutation p = compose(elems[i], g);
      if (index.emplace(p, 0).second) {
        elems.push_back(std::move(p));
        if (elems.size() > order_cap)
          throw SizeError("permutation group '" + spec + "' exceeds the order cap " + std::to_string(order_cap));
      }
    }
  std::sort(elems.begin(), elems.end());  // identity is lexicographically smallest
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = cycle_notation(elems[i]);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index.at(compose(elems[i], elems[j]));
  }
  return GroupTable(std::move(spec), n, std::move(table), std::move(labels));
}

GroupTable symmetric_group(std::uint32_t n, std::size_t order_cap) {
  std::string spec = "sym:" + std::to_string(n);
  check_cap(factorial(n), order_cap, spec);
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t(n), c(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      t[x] = x;
      c[x] = (x + 1) % n;
    }
    std::swap(t[0], t[1]);
    gens = {t, c};
  }
  return permutation_group(spec, gens, order_cap);
}

GroupTable alternating_group(std::uint32_t n, std::size_t order_cap) {
  std::string spec = "alt:" + std::to_string(n);
  check_cap(n < 2 ? 1 : factorial(n) / 2, order_cap, spec);
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) {  // 3-cycles (1 2 k+1)
    Permutation p(n);
    for (std::uint32_t x = 0; x < n; ++x) p[x] = x;
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return permutation_group(spec, gens, order_cap);
}

std::vector<Permutation> parse_permutations(const std::string& text) {
  std::vector<std::vector<std::vector<std::uint32_t>>> cycles_per_gen;
  std::uint32_t degree = 0;
  std::stringstream gen_stream(text);
  std::string gen;
  while (std::getline(gen_stream, gen, ';')) {
    gen = trim(gen);
    if (gen.empty()) throw UsageError("invalid permutation spec '" + text + "': empty generator");
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    while (i < gen.size()) {
      if (std::isspace(static_cast<unsigned char>(gen[i]))) {
        ++i;
        continue;
      }
      if (gen[i] != '(') throw UsageError("invalid permutation spec '" + text + "': unexpected '" + gen.substr(i, 1) + "'");
      auto close = gen.find(')', i);
      if (close == std::string::npos) throw UsageError("invalid permutation spec '" + text + "': unbalanced '('");
      std::stringstream pts(gen.substr(i + 1, close - i - 1));
      std::string tok;
      std::vector<std::uint32_t> cycle;
      while (pts >> tok) {
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        std::uint32_t p = parse_positive(tok, text);
        if (p > 64) throw UsageError("invalid permutation spec '" + text + "': point " + tok + " too large");
        if (std::find(cycle.begin(), cycle.end(), p - 1) != cycle.end())
          throw UsageError("invalid permutation spec '" + text + "': point " + tok + " repeated in a cycle");
        cycle.push_back(p - 1);
        degree = std::max(degree, p);
      }
      cycles.push_back(std::move(cycle));
      i = close + 1;
    }
    cycles_per_gen.push_back(std::move(cycles));
  }
  if (cycles_per_gen.empty()) throw UsageError("invalid permutation spec '" + text + "': no generators");
  std::vector<Permutation> out;
  for (const auto& cycles : cycles_per_gen) {
    Permutation p(degree);
    for (std::uint32_t x = 0; x < degree; ++x) p[x] = x;
    std::vector<bool> touched(degree, false);
    for (const auto& c : cycles)
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (touched[c[j]]) throw UsageError("invalid permutation spec '" + text + "': cycles are not disjoint");
        touched[c[j]] = true;
        p[c[j]] = c[(j + 1) % c.size()];
      }
    out.push_back(std::move(p));
  }
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += "(";
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      out += (first ? "" : " ") + std::to_string(y + 1);
      first = false;
      y = p[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupTable group_from_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open Cayley table file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("Cayley table file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw UsageError("Cayley table file '" + path + "' must contain \"order\" and \"table\"");
  std::size_t n = 0;
  std::vector<Element> table;
  try {
    n = j.at("order").get<std::size_t>();
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != n) throw ConstructionError("Cayley table must have " + std::to_string(n) + " rows");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw ConstructionError("Cayley table rows must have " + std::to_string(n) + " entries");
      for (const auto& v : row) {
        auto x = v.get<std::int64_t>();
        if (x < 0 || static_cast<std::size_t>(x) >= n) throw ConstructionError("Cayley table entry out of range");
        table.push_back(static_cast<Element>(x));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("Cayley table file '" + path + "': " + e.what());
  }
  std::vector<std::string> labels;
  if (j.contains("labels") && j["labels"].is_array() && j["labels"].size() == n)
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  return GroupTable("cayley:" + path, n, std::move(table), std::move(labels));
}

GroupPtr build_group(const std::string& raw, const BuildOptions& options) {
  const std::string spec = trim(raw);
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("invalid group spec '" + spec + "': expected <family>:<args>");
  const std::string family = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  const std::size_t cap = options.order_cap;

  if (family == "ab") {
    std::vector<std::uint32_t> factors;
    std::stringstream ss(args);
    std::string tok;
    std::uint64_t order = 1;
    while (std::getline(ss, tok, ',')) {
      auto d = parse_positive(tok, spec);
      order *= d;
      check_cap(order, cap, spec);
      if (d > 1) factors.push_back(d);
    }
    if (args.empty()) throw UsageError("invalid group spec '" + spec + "': missing factors");
    auto g = abelian_group(factors);
    return std::make_shared<const GroupTable>(spec, g.order(), g.table(), g.labels());
  }
  if (family == "dih") {
    auto n = parse_positive(args, spec);
    check_cap(2ull * n, cap, spec);
    return std::make_shared<const GroupTable>(dihedral_group(n));
  }
  if (family == "quat") {
    auto n = parse_positive(args, spec);
    if (n < 8 || n % 4 != 0) throw UsageError("invalid group spec '" + spec + "': quat order must be a multiple of 4, at least 8");
    check_cap(n, cap, spec);
    return std::make_shared<const GroupTable>(dicyclic_group(n));
  }
  if (family == "sym") return std::make_shared<const GroupTable>(symmetric_group(parse_positive(args, spec), cap));
  if (family == "alt") return std::make_shared<const GroupTable>(alternating_group(parse_positive(args, spec), cap));
  if (family == "perm") return std::make_shared<const GroupTable>(permutation_group(spec, parse_permutations(args), cap));
  if (family == "cayley") {
    auto g = group_from_cayley_file(trim(args));
    check_cap(g.order(), cap, spec);
    return std::make_shared<const GroupTable>(std::move(g));
  }
  throw UsageError("invalid group spec '" + spec + "': unknown family '" + family + "'");
}

std::vector<std::string> split_group_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    if (tok.find(':') == std::string::npos) {
      if (out.empty()) throw UsageError("invalid group list '" + text + "': '" + tok + "' has no family prefix");
      out.back() += "," + tok;
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

std::vector<std::string> builtin_group_specs(std::size_t max_order) {
  std::vector<std::string> out;
  // Abelian groups via invariant factor chains d1 | d2 | ... with product n.
  std::function<void(std::size_t, std::uint32_t, std::vector<std::uint32_t>&, std::vector<std::vector<std::uint32_t>>&)>
      chains = [&](std::size_t rest, std::uint32_t divisor_of_prev, std::vector<std::uint32_t>& cur,
                   std::vector<std::vector<std::uint32_t>>& acc) {
        // Largest factor first; each later factor divides the one before it.
        if (rest == 1) {
          acc.emplace_back(cur.rbegin(), cur.rend());
          return;
        }
        for (std::uint32_t d = 2; d <= rest; ++d) {
          if (rest % d != 0 || (divisor_of_prev != 0 && divisor_of_prev % d != 0)) continue;
          cur.push_back(d);
          chains(rest / d, d, cur, acc);
          cur.pop_back();
        }
      };
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<std::vector<std::uint32_t>> acc;
    std::vector<std::uint32_t> cur;
    chains(n, 0, cur, acc);
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (const auto& f : acc) {
      std::string s = "ab:";
      for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
      if (f.empty()) s += "1";
      out.push_back(s);
    }
  }
  for (std::uint32_t n = 3; 2ull * n <= max_order; ++n) out.push_back("dih:" + std::to_string(n));
  for (std::uint32_t n = 8; n <= max_order; n += 4) out.push_back("quat:" + std::to_string(n));
  for (std::uint32_t n = 3; factorial(n) <= max_order; ++n) out.push_back("sym:" + std::to_string(n));
  for (std::uint32_t n = 4; factorial(n) / 2 <= max_order; ++n) out.push_back("alt:" + std::to_string(n));
  return out;
}

}  // namespace isoprod
