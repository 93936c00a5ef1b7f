#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "f2lie/bitvector.hpp"

namespace f2lie {

// Polynomials over GF(2) of degree <= 126, bit i = coefficient of x^i.
__extension__ using Poly = unsigned __int128;

int poly_degree(Poly f);  // -1 for the zero polynomial
Poly poly_mul(Poly a, Poly b);  // requires deg a + deg b <= 126
Poly poly_mod(Poly a, Poly m);
Poly poly_div(Poly a, Poly m);
Poly poly_gcd(Poly a, Poly b);
Poly poly_mulmod(Poly a, Poly b, Poly m);
bool poly_is_irreducible(Poly f);

// Distinct monic irreducible factors, by ascending degree then value.
std::vector<Poly> poly_irreducible_factors(Poly f);

// Characteristic polynomial of a column-packed square matrix.
Poly charpoly(std::span<const Vec> m);
// f(m), column packed.
std::vector<Vec> poly_eval(Poly f, std::span<const Vec> m);

}  // namespace f2lie
