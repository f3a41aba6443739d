// Character tables over a finite field and their lift to eigenvalue multiplicities.
//
// General groups: class sums K_j act on the centre of the group algebra by
// K_j K_l = sum_m a(j,l,m) K_m. For every irreducible chi the vector of central
// character values w_l = |C_l| chi(g_l) / chi(1) is a common right eigenvector of
// the matrices M_j[l][m] = a(j,l,m), with eigenvalue w_j. Working modulo a prime
// p = 1 (mod e) these eigenvectors are found by splitting F_p^k into common
// eigenspaces, after which degrees, character values and eigenvalue multiplicities
// are all recovered modulo p and lifted to small non-negative integers.

#include <algorithm>
#include <cmath>
#include <functional>

#include "isoprod/characters.hpp"
#include "isoprod/errors.hpp"

namespace isoprod {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // row-major

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= p;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Basis (as columns, returned as a list of vectors) of {x : A x = 0}, A is rows x cols.
std::vector<Vec> nullspace(Mat a, std::size_t cols, const Field& f) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    u64 inv = f.inv(a[r][c]);
    for (auto& v : a[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = f.sub(0, a[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

u64 primitive_root_of_unity(std::uint32_t e, const Field& f) {
  std::vector<u64> prime_factors;
  {
    u64 m = e;
    for (u64 q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        prime_factors.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) prime_factors.push_back(m);
  }
  for (u64 a = 2; a < f.p; ++a) {
    u64 z = f.pow(a, (f.p - 1) / e);
    bool primitive = true;
    for (u64 q : prime_factors)
      if (f.pow(z, e / q) == 1) primitive = false;
    if (primitive) return z;
  }
  if (e == 1) return 1;
  throw ConsistencyError("no primitive root of unity of order " + std::to_string(e) + " modulo " + std::to_string(f.p));
}

}  // namespace

std::uint64_t dixon_prime(std::size_t order, std::uint32_t exponent) {
  u64 p = exponent + 1;
  while (p <= 2 * order || !is_prime(p)) p += exponent;
  return p;
}

std::vector<Character> dixon_characters(const GroupTable& g) {
  const std::size_t n = g.order();
  const std::size_t k = g.class_count();
  const std::uint32_t e = g.exponent();
  const Field f{dixon_prime(n, e)};

  // a[j][l][m] = #{x in C_j : x^-1 g_m in C_l}
  std::vector<std::vector<Vec>> a(k, std::vector<Vec>(k, Vec(k, 0)));
  for (std::size_t m = 0; m < k; ++m) {
    Element gm = g.classes()[m].representative;
    for (std::size_t x = 0; x < n; ++x) {
      Element y = g.mul(g.inverse(static_cast<Element>(x)), gm);
      ++a[g.class_of(static_cast<Element>(x))][g.class_of(y)][m];
    }
  }

  // Each space is a list of basis vectors in F_p^k.
  std::vector<std::vector<Vec>> spaces(1);
  for (std::size_t i = 0; i < k; ++i) {
    Vec v(k, 0);
    v[i] = 1;
    spaces[0].push_back(v);
  }
  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    const auto& mj = a[j];
    std::vector<std::vector<Vec>> next;
    for (auto& space : spaces) {
      const std::size_t d = space.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // image[i] = M_j * basis[i]
      std::vector<Vec> image(d, Vec(k, 0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < k; ++l) {
          u64 s = 0;
          for (std::size_t m = 0; m < k; ++m) s = f.add(s, f.mul(mj[l][m] % f.p, space[i][m]));
          image[i][l] = s;
        }
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < f.p && found < d; ++lambda) {
        // (M - lambda) B x = 0, a k x d system in x
        Mat sys(k, Vec(d, 0));
        for (std::size_t l = 0; l < k; ++l)
          for (std::size_t i = 0; i < d; ++i) sys[l][i] = f.sub(image[i][l], f.mul(lambda, space[i][l]));
        auto null = nullspace(std::move(sys), d, f);
        if (null.empty()) continue;
        std::vector<Vec> part;
        for (const auto& x : null) {
          Vec v(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(x[i], space[i][l]));
          part.push_back(std::move(v));
        }
        found += part.size();
        next.push_back(std::move(part));
      }
      if (found != d)
        throw ConsistencyError("class matrix of '" + g.spec() + "' is not diagonalisable modulo " + std::to_string(f.p));
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.size() != 1) throw ConsistencyError("class matrices of '" + g.spec() + "' do not separate the characters");

  const u64 z = primitive_root_of_unity(e, f);
  const u64 inv_e = f.inv(e % f.p);
  std::vector<std::vector<std::size_t>> power_class(k, std::vector<std::size_t>(e));
  for (std::size_t c = 0; c < k; ++c) {
    Element rep = g.classes()[c].representative;
    Element x = 0;
    for (std::uint32_t j = 0; j < e; ++j) {
      power_class[c][j] = g.class_of(x);
      x = g.mul(x, rep);
    }
  }

  std::vector<Character> out;
  for (const auto& s : spaces) {
    Vec w = s[0];
    if (w[0] == 0) throw ConsistencyError("central character vanishes at the identity class");
    u64 norm = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, norm);

    // chi(1)^2 = |G| / sum_l w_l w_l* / |C_l|
    u64 s_sum = 0;
    for (std::size_t l = 0; l < k; ++l)
      s_sum = f.add(s_sum, f.mul(f.mul(w[l], w[g.inverse_class(l)]), f.inv(g.class_size(l) % f.p)));
    if (s_sum == 0) throw ConsistencyError("degenerate central character modulo " + std::to_string(f.p));
    u64 target = f.mul(n % f.p, f.inv(s_sum));
    std::uint32_t degree = 0;
    for (std::uint32_t d = 1; std::uint64_t{d} * d <= n; ++d)
      if (std::uint64_t{d} * d % f.p == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw ConsistencyError("no integral degree lifts modulo " + std::to_string(f.p));

    Vec chi(k);
    for (std::size_t l = 0; l < k; ++l) chi[l] = f.mul(f.mul(w[l], degree), f.inv(g.class_size(l) % f.p));

    Character ch;
    ch.degree = degree;
    ch.values.assign(k, std::vector<std::uint32_t>(e, 0));
    for (std::size_t c = 0; c < k; ++c) {
      std::uint64_t total = 0;
      for (std::uint32_t m = 0; m < e; ++m) {
        // m_k = (1/e) sum_j chi(g^j) z^(-jk)
        u64 zk_inv = f.inv(f.pow(z, m));
        u64 acc = 0, zpow = 1;
        for (std::uint32_t j = 0; j < e; ++j) {
          acc = f.add(acc, f.mul(chi[power_class[c][j]], zpow));
          zpow = f.mul(zpow, zk_inv);
        }
        u64 mult = f.mul(acc, inv_e);
        if (mult > degree)
          throw ConsistencyError("eigenvalue multiplicity lift failed for '" + g.spec() + "' (value " +
                                 std::to_string(mult) + " mod " + std::to_string(f.p) + ")");
        ch.values[c][m] = static_cast<std::uint32_t>(mult);
        total += mult;
      }
      if (total != degree) throw ConsistencyError("eigenvalue multiplicities do not sum to the degree");
    }
    out.push_back(std::move(ch));
  }
  return out;
}

std::vector<Character> abelian_characters(const GroupTable& g) {
  const std::size_t n = g.order();
  const std::uint32_t e = g.exponent();
  const auto factors = abelian_invariants(g).factors;
  const std::size_t t = factors.size();

  // Basis b_0..b_{t-1} with |b_i| = d_i spanning a direct sum, chosen largest factor first.
  std::vector<Element> basis(t, 0);
  std::vector<ElementSet> spans(t + 1, ElementSet(n));
  spans[t].insert(0);
  auto extend = [&](const ElementSet& span, Element x, std::uint32_t ord, ElementSet& out) {
    out = ElementSet(n);
    auto members = span.elements();
    Element p = 0;
    for (std::uint32_t j = 0; j < ord; ++j) {
      if (j > 0 && span.contains(p)) return false;
      for (Element s : members) out.insert(g.mul(s, p));
      p = g.mul(p, x);
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == 0) return true;
    const std::size_t idx = i - 1;
    for (std::size_t x = 0; x < n; ++x) {
      if (g.element_order(static_cast<Element>(x)) != factors[idx]) continue;
      if (!extend(spans[i], static_cast<Element>(x), factors[idx], spans[idx])) continue;
      basis[idx] = static_cast<Element>(x);
      if (search(idx)) return true;
    }
    return false;
  };
  if (!search(t)) throw ConsistencyError("no basis found for abelian group '" + g.spec() + "'");

  // coordinates of every element in that basis
  std::vector<std::vector<std::uint32_t>> coord(n, std::vector<std::uint32_t>(t, 0));
  {
    std::vector<std::uint32_t> c(t, 0);
    while (true) {
      Element x = 0;
      for (std::size_t i = 0; i < t; ++i) x = g.mul(x, g.pow(basis[i], c[i]));
      coord[x] = c;
      std::size_t i = 0;
      while (i < t && ++c[i] == factors[i]) c[i++] = 0;
      if (i == t) break;
    }
  }

  std::vector<Character> out;
  std::vector<std::uint32_t> a(t, 0);
  while (true) {
    Character ch;
    ch.degree = 1;
    ch.values.assign(g.class_count(), std::vector<std::uint32_t>(e, 0));
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t power = 0;
      for (std::size_t i = 0; i < t; ++i) power += std::uint64_t{a[i]} * coord[x][i] * (e / factors[i]);
      ch.values[g.class_of(static_cast<Element>(x))][power % e] = 1;
    }
    out.push_back(std::move(ch));
    std::size_t i = 0;
    while (i < t && ++a[i] == factors[i]) a[i++] = 0;
    if (i == t) break;
  }
  return out;
}

}  // namespace isoprod
