#include "f2lie/gf2poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "f2lie/bitmatrix.hpp"

namespace f2lie {

namespace {

constexpr Poly kOne = 1;
constexpr Poly kX = 2;

}  // namespace

int poly_degree(Poly f) {
  const auto hi = static_cast<std::uint64_t>(f >> 64);
  if (hi) return 127 - __builtin_clzll(hi);
  const auto lo = static_cast<std::uint64_t>(f);
  if (lo) return 63 - __builtin_clzll(lo);
  return -1;
}

Poly poly_mul(Poly a, Poly b) {
  if (a == 0 || b == 0) return 0;
  if (poly_degree(a) + poly_degree(b) > 126) throw std::overflow_error("poly_mul: degree too large");
  Poly out = 0;
  while (b) {
    if (b & 1) out ^= a;
    a <<= 1;
    b >>= 1;
  }
  return out;
}

Poly poly_mod(Poly a, Poly m) {
  const int dm = poly_degree(m);
  if (dm < 0) throw std::domain_error("poly_mod: zero modulus");
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

Poly poly_div(Poly a, Poly m) {
  const int dm = poly_degree(m);
  if (dm < 0) throw std::domain_error("poly_div: zero divisor");
  Poly q = 0;
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    q ^= kOne << (da - dm);
    a ^= m << (da - dm);
  }
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

Poly poly_mulmod(Poly a, Poly b, Poly m) {
  a = poly_mod(a, m);
  b = poly_mod(b, m);
  const int dm = poly_degree(m);
  Poly out = 0;
  while (b) {
    if (b & 1) out ^= a;
    b >>= 1;
    a <<= 1;
    if (poly_degree(a) >= dm) a ^= m;
  }
  return out;
}

namespace {

// x^(2^e) mod f, iterated squaring
Poly frobenius_power(Poly f, int e) {
  Poly r = poly_mod(kX, f);
  for (int i = 0; i < e; ++i) r = poly_mulmod(r, r, f);
  return r;
}

// Splits a squarefree product of irreducibles of equal degree e.
void equal_degree_split(Poly f, int e, std::vector<Poly>& out, std::uint64_t& seed) {
  const int df = poly_degree(f);
  if (df == e) {
    out.push_back(f);
    return;
  }
  while (true) {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    Poly a = (static_cast<Poly>(seed) << 64 | static_cast<Poly>(seed * 0x9e3779b97f4a7c15ULL));
    a = poly_mod(a, f);
    if (poly_degree(a) < 1) continue;
    // trace map a + a^2 + ... + a^(2^(e-1))
    Poly t = a, p = a;
    for (int i = 1; i < e; ++i) {
      p = poly_mulmod(p, p, f);
      t ^= p;
    }
    const Poly g = poly_gcd(f, t);
    const int dg = poly_degree(g);
    if (dg > 0 && dg < df) {
      equal_degree_split(g, e, out, seed);
      equal_degree_split(poly_div(f, g), e, out, seed);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> poly_irreducible_factors(Poly f) {
  if (poly_degree(f) < 1) return {};
  std::vector<Poly> out;
  std::uint64_t seed = 0x243f6a8885a308d3ULL;
  Poly rest = f;
  // Factors of degree < e have been divided out completely, so the gcd below
  // is the product of the distinct irreducible factors of degree exactly e.
  for (int e = 1; poly_degree(rest) >= 1; ++e) {
    const Poly h = poly_gcd(rest, frobenius_power(rest, e) ^ kX);
    if (poly_degree(h) < 1) continue;
    std::vector<Poly> found;
    equal_degree_split(h, e, found, seed);
    for (const Poly p : found) {
      out.push_back(p);
      while (poly_mod(rest, p) == 0) rest = poly_div(rest, p);
    }
  }
  std::sort(out.begin(), out.end(), [](Poly a, Poly b) {
    const int da = poly_degree(a), db = poly_degree(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

bool poly_is_irreducible(Poly f) {
  const auto fs = poly_irreducible_factors(f);
  return fs.size() == 1 && fs[0] == f;
}

Poly charpoly(std::span<const Vec> m) {
  const std::size_t d = m.size();
  if (d > 64) throw std::length_error("charpoly: dimension > 64");
  // Invariant subspace built so far, with rows reduced on their lowest bits.
  std::vector<Vec> rows;
  Poly result = 1;
  auto reduce_fixed = [&](Vec v, std::size_t upto) {
    for (std::size_t r = 0; r < upto; ++r)
      if (v & rows[r] & (~rows[r] + 1)) v ^= rows[r];
    return v;
  };
  while (rows.size() < d) {
    const std::size_t fixed = rows.size();
    Vec start = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (reduce_fixed(unit(i), fixed)) {
        start = unit(i);
        break;
      }
    }
    // Krylov sequence modulo the fixed part
    std::vector<Vec> kry;
    std::vector<Poly> kcombo;
    Vec v = start;
    Poly vpoly = 1;
    while (true) {
      Vec w = reduce_fixed(v, fixed);
      Poly c = vpoly;
      for (std::size_t r = 0; r < kry.size(); ++r)
        if (w & kry[r] & (~kry[r] + 1)) {
          w ^= kry[r];
          c ^= kcombo[r];
        }
      if (!w) {
        result = poly_mul(result, c);
        break;
      }
      kry.push_back(w);
      kcombo.push_back(c);
      v = cols::apply(m, v);
      vpoly <<= 1;
    }
    for (Vec k : kry) rows.push_back(k);
  }
  return result;
}

std::vector<Vec> poly_eval(Poly f, std::span<const Vec> m) {
  const std::size_t d = m.size();
  std::vector<Vec> acc(d, 0);
  for (int i = poly_degree(f); i >= 0; --i) {
    acc = cols::multiply(m, acc);
    if ((f >> i) & 1)
      for (std::size_t j = 0; j < d; ++j) acc[j] ^= unit(j);
  }
  return acc;
}

}  // namespace f2lie
