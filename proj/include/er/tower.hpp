#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "er/field.hpp"

namespace er {

// GF(q0^t) presented as an extension of an existing Field by a monic degree-t
// modulus with coefficients in the base field. Element index = base-q0 value of
// the coefficient vector over the base (constant term least significant), so
// digit i of an element is itself a base-field index.
class Tower {
 public:
  Tower(const Field& base, unsigned t, std::vector<fe> modulus);
  // x^t - mu; throws NoBinomial when that binomial is reducible.
  static Tower binomial(const Field& base, unsigned t, fe mu);
  // t = 2, lexicographically least monic irreducible quadratic over the base,
  // comparing (c0, c1) constant-term-first by element index.
  static Tower quadratic_lex(const Field& base);

  Tower(const Tower&) = delete;
  Tower& operator=(const Tower&) = delete;
  Tower(Tower&&) = default;

  const Field& base() const { return *base_; }
  unsigned t() const { return t_; }
  fe p() const { return base_->p(); }
  std::uint64_t q() const { return q_; }
  std::uint64_t qbase() const { return qb_; }
  const std::vector<fe>& modulus() const { return mod_; }  // base-field indices
  fe theta() const { return static_cast<fe>(qb_); }        // the adjoined root

  fe digit(fe a, unsigned i) const;
  std::vector<fe> digits(fe a) const;              // length t, base-field indices
  fe from_digits(const std::vector<fe>& d) const;  // BadLength unless t

  fe add(fe a, fe b) const;
  fe sub(fe a, fe b) const { return add(a, neg(b)); }
  fe neg(fe a) const;
  fe mul(fe a, fe b) const;
  fe inv(fe a) const;
  fe div(fe a, fe b) const { return mul(a, inv(b)); }
  fe pow(fe a, std::uint64_t e) const;
  fe scalar(std::uint64_t c) const { return base_->scalar(c); }

 private:
  void init();
  fe mul_slow(fe a, fe b) const;

  const Field* base_;
  unsigned t_ = 0;
  std::uint64_t qb_ = 0;
  std::uint64_t q_ = 0;
  std::vector<fe> mod_;
  std::vector<fe> red_;  // theta^{t+k} rows, k = 0..t-2, base-field indices
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
};

}  // namespace er
