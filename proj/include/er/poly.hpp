#pragma once
#include <vector>

#include "er/field.hpp"

namespace er {

// Polynomials over a Field as coefficient vectors, constant term first.
using Poly = std::vector<fe>;

Poly poly_trim(Poly f);
int poly_deg(const Poly& f);  // -1 for the zero polynomial
fe poly_eval(const Field& F, const Poly& f, fe x);
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, fe c, const Poly& a);
Poly poly_deriv(const Field& F, const Poly& f);
Poly poly_mod(const Field& F, Poly f, const Poly& g);  // g nonzero
Poly poly_gcd(const Field& F, Poly a, Poly b);         // monic (or zero)
bool poly_irreducible(const Field& F, const Poly& f);  // trial division
bool poly_squarefree(const Field& F, const Poly& f);
// Is f == c * h^2 for a constant c and nonconstant h? Exact small-degree scan.
bool poly_const_times_square(const Field& F, const Poly& f);

}  // namespace er
