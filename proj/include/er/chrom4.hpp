#pragma once
#include <cstdint>
#include <vector>

#include "er/field.hpp"
#include "er/poly.hpp"

namespace er {

struct CharSum {
  long long sum;
  bool degenerate;  // zero discriminant: the quadratic is a scaled square
};

// Closed form for sum_c chi(a2 c^2 + a1 c + a0) with a2 != 0: -chi(a2) off
// the degenerate locus, (q-1) chi(a2) on it.
CharSum quad_char_sum_closed(const Field& F, fe a2, fe a1, fe a0);

// Direct evaluation of sum_c chi(f(c)).
long long char_sum_direct(const Field& F, const Poly& f);

struct WeilCheck {
  long long sum;
  std::uint64_t bound_sq;  // (deg f - 1)^2 q
  bool ok;                 // sum^2 <= bound_sq
};
// Character-sum bound for a nonconstant polynomial that is not a constant
// times a square (IsSquare otherwise).
WeilCheck weil_check(const Field& F, const Poly& f);

struct WeilScan {
  std::uint64_t drawn = 0;   // candidates generated
  std::uint64_t tested = 0;  // squarefree candidates checked
  std::uint64_t violations = 0;
};
// Seeded scan: random polynomials of exact degree `degree`; squarefree ones
// are checked against the character-sum bound until `count` have been tested.
WeilScan weil_random_scan(const Field& F, unsigned degree, std::uint64_t count,
                          std::uint64_t seed);

// Lexicographically least ascending k-tuple with chi(a_i + a_j) = +1 for all
// i < j, by pruned depth-first search (SearchExhausted when none exists).
std::vector<fe> find_alphas(const Field& F, unsigned k = 5);
// The same tuple by full enumeration of ascending k-tuples; oracle route.
std::vector<fe> find_alphas_bruteforce(const Field& F, unsigned k = 5);

struct Triangle {
  fe u, v, w;
};
// Solves u + v = A, v + w = B, u + w = C.
Triangle triangle_solve(const Field& F, fe A, fe B, fe C);

}  // namespace er
