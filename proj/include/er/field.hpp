#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "er/errors.hpp"

namespace er {

// Element index within its field. Elements of GF(p^n) are polynomials of degree
// < n over GF(p); the index is the base-p value of the coefficient vector with
// the constant term as the least significant digit.
using fe = std::uint32_t;

// GF(p^n) for an odd prime p. Arithmetic is exposed on raw indices; the Elem
// wrapper below adds cross-field checking for call sites that want it.
class Field {
 public:
  // Picks the lexicographically least monic irreducible modulus, comparing
  // coefficient vectors (c0, c1, ..., c_{n-1}) constant-term-first.
  Field(fe p, unsigned n);
  // Custom monic modulus of degree n, coefficients (c0, ..., cn) with cn = 1.
  Field(fe p, unsigned n, std::vector<fe> modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  fe p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }
  const std::vector<fe>& modulus() const { return mod_; }
  std::string str() const;  // "p^n/c0,c1,...,cn"

  fe add(fe a, fe b) const;
  fe sub(fe a, fe b) const;
  fe neg(fe a) const;
  fe mul(fe a, fe b) const;
  fe inv(fe a) const;  // DivisionByZero on 0
  fe div(fe a, fe b) const { return mul(a, inv(b)); }
  fe pow(fe a, std::uint64_t e) const;
  fe scalar(std::uint64_t c) const { return static_cast<fe>(c % p_); }

  std::vector<fe> coeffs(fe a) const;                  // length n, GF(p) digits
  fe from_coeffs(const std::vector<fe>& c) const;      // BadLength unless n

  // Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
  int quad_char(fe a) const;
  // Canonical half-split of the nonzero elements: true iff idx(a) < idx(-a).
  // ZeroElement at 0. Exactly one of a, -a is in the positive half.
  bool plus_half(fe a) const;
  std::uint64_t element_order(fe a) const;  // ZeroElement at 0
  // Least-index b with b*b == a, if a is a square (0 -> 0).
  std::optional<fe> sqrt_min(fe a) const;

 private:
  void init();
  fe mul_slow(fe a, fe b) const;

  fe p_ = 0;
  unsigned n_ = 0;
  std::uint64_t q_ = 0;
  std::vector<fe> mod_;        // degree-n monic, length n+1, constant first
  std::vector<fe> red_;        // x^{n+k} mod modulus, k = 0..n-2, rows of n
  std::vector<fe> digits_;     // flat q*n digit cache (small fields)
  std::vector<std::uint16_t> mul_;  // q*q multiplication table (small fields)
  std::vector<std::uint16_t> inv_;
  std::vector<std::int8_t> chi_;
};

// Checked element: carries its field, throws FieldMismatch when operands
// belong to different Field instances.
struct Elem {
  const Field* F = nullptr;
  fe v = 0;
};

inline void check_same(const Elem& a, const Elem& b) {
  if (a.F != b.F) throw FieldMismatch("operands belong to different fields");
}
inline Elem operator+(Elem a, Elem b) { check_same(a, b); return {a.F, a.F->add(a.v, b.v)}; }
inline Elem operator-(Elem a, Elem b) { check_same(a, b); return {a.F, a.F->sub(a.v, b.v)}; }
inline Elem operator*(Elem a, Elem b) { check_same(a, b); return {a.F, a.F->mul(a.v, b.v)}; }
inline Elem operator/(Elem a, Elem b) { check_same(a, b); return {a.F, a.F->div(a.v, b.v)}; }
inline Elem operator-(Elem a) { return {a.F, a.F->neg(a.v)}; }
inline bool operator==(Elem a, Elem b) { check_same(a, b); return a.v == b.v; }

// x^t - mu irreducible over F? Uses the multiplicative-order criterion; t >= 2.
bool binomial_irreducible(const Field& F, unsigned t, fe mu);
// Least nonzero mu (by index) making x^t - mu irreducible; t odd, >= 3.
std::optional<fe> find_binomial_mu(const Field& F, unsigned t);

// Reference check by trial division over F, for testing the criterion.
bool binomial_irreducible_bruteforce(const Field& F, unsigned t, fe mu);

}  // namespace er
