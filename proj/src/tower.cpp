#include "er/tower.hpp"

#include "er/poly.hpp"

namespace er {

Tower::Tower(const Field& base, unsigned t, std::vector<fe> modulus) : base_(&base), t_(t) {
  if (t < 2) throw Error("tower degree must be >= 2");
  if (t > 8) throw TooLarge("tower degree too large");
  if (modulus.size() != t + 1 || modulus[t] != 1) throw Error("modulus must be monic of degree t");
  for (fe c : modulus)
    if (c >= base.q()) throw Error("modulus coefficient out of range");
  if (!poly_irreducible(base, modulus)) throw Error("modulus is reducible over the base");
  mod_ = std::move(modulus);
  init();
}

Tower Tower::binomial(const Field& base, unsigned t, fe mu) {
  if (!binomial_irreducible(base, t, mu))
    throw NoBinomial("x^t - mu is reducible for this mu");
  std::vector<fe> m(t + 1, 0);
  m[0] = base.neg(mu);
  m[t] = 1;
  return Tower(base, t, std::move(m));
}

Tower Tower::quadratic_lex(const Field& base) {
  for (std::uint64_t c0 = 0; c0 < base.q(); ++c0)
    for (std::uint64_t c1 = 0; c1 < base.q(); ++c1) {
      std::vector<fe> m = {static_cast<fe>(c0), static_cast<fe>(c1), 1};
      if (poly_irreducible(base, m)) return Tower(base, 2, std::move(m));
    }
  throw Error("no irreducible quadratic over the base");  // unreachable
}

void Tower::init() {
  qb_ = base_->q();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < t_; ++i) {
    q *= qb_;
    if (q > (1ull << 31)) throw TooLarge("tower size exceeds the supported word size");
  }
  q_ = q;

  red_.assign(std::size_t(t_ - 1) * t_, 0);
  std::vector<fe> row(t_);
  for (unsigned i = 0; i < t_; ++i) row[i] = base_->neg(mod_[i]);
  for (unsigned k = 0; k + 1 < t_; ++k) {
    std::copy(row.begin(), row.end(), red_.begin() + std::size_t(k) * t_);
    fe top = row[t_ - 1];
    for (unsigned i = t_ - 1; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    for (unsigned i = 0; i < t_; ++i) row[i] = base_->add(row[i], base_->mul(top, red_[i]));
  }

  if (q_ <= 4096) {
    mul_.assign(std::size_t(q_) * q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = a; b < q_; ++b) {
        fe m = mul_slow(static_cast<fe>(a), static_cast<fe>(b));
        mul_[a * q_ + b] = static_cast<std::uint16_t>(m);
        mul_[b * q_ + a] = static_cast<std::uint16_t>(m);
      }
    inv_.assign(q_, 0);
    for (std::uint64_t a = 1; a < q_; ++a)
      inv_[a] = static_cast<std::uint16_t>(pow(static_cast<fe>(a), q_ - 2));
  }
}

fe Tower::digit(fe a, unsigned i) const {
  std::uint64_t t = a;
  for (unsigned k = 0; k < i; ++k) t /= qb_;
  return static_cast<fe>(t % qb_);
}

std::vector<fe> Tower::digits(fe a) const {
  std::vector<fe> d(t_);
  std::uint64_t t = a;
  for (unsigned i = 0; i < t_; ++i) {
    d[i] = static_cast<fe>(t % qb_);
    t /= qb_;
  }
  return d;
}

fe Tower::from_digits(const std::vector<fe>& d) const {
  if (d.size() != t_) throw BadLength("digit vector has wrong length");
  fe out = 0;
  std::uint64_t mult = 1;
  for (unsigned i = 0; i < t_; ++i) {
    if (d[i] >= qb_) throw Error("digit out of range");
    out += static_cast<fe>(d[i] * mult);
    mult *= qb_;
  }
  return out;
}

fe Tower::add(fe a, fe b) const {
  fe out = 0;
  std::uint64_t mult = 1;
  std::uint64_t ta = a, tb = b;
  for (unsigned i = 0; i < t_; ++i) {
    fe d = base_->add(static_cast<fe>(ta % qb_), static_cast<fe>(tb % qb_));
    out += static_cast<fe>(d * mult);
    ta /= qb_;
    tb /= qb_;
    mult *= qb_;
  }
  return out;
}

fe Tower::neg(fe a) const {
  fe out = 0;
  std::uint64_t mult = 1;
  std::uint64_t ta = a;
  for (unsigned i = 0; i < t_; ++i) {
    out += static_cast<fe>(base_->neg(static_cast<fe>(ta % qb_)) * mult);
    ta /= qb_;
    mult *= qb_;
  }
  return out;
}

fe Tower::mul(fe a, fe b) const {
  if (!mul_.empty()) return mul_[std::size_t(a) * q_ + b];
  return mul_slow(a, b);
}

fe Tower::mul_slow(fe a, fe b) const {
  fe da[8], db[8];
  std::uint64_t ta = a, tb = b;
  for (unsigned i = 0; i < t_; ++i) {
    da[i] = static_cast<fe>(ta % qb_);
    db[i] = static_cast<fe>(tb % qb_);
    ta /= qb_;
    tb /= qb_;
  }
  fe conv[16] = {0};
  for (unsigned i = 0; i < t_; ++i)
    for (unsigned j = 0; j < t_; ++j)
      conv[i + j] = base_->add(conv[i + j], base_->mul(da[i], db[j]));
  fe res[8];
  for (unsigned i = 0; i < t_; ++i) res[i] = conv[i];
  for (unsigned k = t_; k <= 2 * t_ - 2; ++k) {
    fe c = conv[k];
    if (!c) continue;
    const fe* row = red_.data() + std::size_t(k - t_) * t_;
    for (unsigned i = 0; i < t_; ++i) res[i] = base_->add(res[i], base_->mul(c, row[i]));
  }
  fe out = 0;
  std::uint64_t mult = 1;
  for (unsigned i = 0; i < t_; ++i) {
    out += static_cast<fe>(res[i] * mult);
    mult *= qb_;
  }
  return out;
}

fe Tower::pow(fe a, std::uint64_t e) const {
  fe r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

fe Tower::inv(fe a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (!inv_.empty()) return inv_[a];
  return pow(a, q_ - 2);
}

}  // namespace er
