#include "er/field.hpp"

#include <algorithm>
#include <sstream>

namespace er {
namespace {

using u64 = std::uint64_t;
using zvec = std::vector<fe>;  // polynomial over Z_p, constant term first

bool is_prime_u64(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

zvec zp_trim(zvec f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// f mod g, g nonzero with invertible leading coefficient (monic in all uses).
zvec zp_mod(zvec f, const zvec& g, u64 p) {
  f = zp_trim(std::move(f));
  while (f.size() >= g.size()) {
    u64 c = f.back();  // leading coeff of g is 1
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      u64 t = f[shift + i] + (p - 1) * c % p * g[i] % p;
      f[shift + i] = static_cast<fe>(t % p);
    }
    f = zp_trim(std::move(f));
  }
  return f;
}

zvec zp_mulmod(const zvec& a, const zvec& b, const zvec& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + u64(a[i]) * b[j]) % p;
  zvec cc(c.begin(), c.end());
  return zp_mod(std::move(cc), m, p);
}

// f^p mod m via square-and-multiply on the exponent p.
zvec zp_pow_p(zvec f, const zvec& m, u64 p) {
  zvec r = {1};
  u64 e = p;
  while (e) {
    if (e & 1) r = zp_mulmod(r, f, m, p);
    f = zp_mulmod(f, f, m, p);
    e >>= 1;
  }
  return r;
}

zvec zp_gcd(zvec a, zvec b, u64 p) {
  a = zp_trim(std::move(a));
  b = zp_trim(std::move(b));
  while (!b.empty()) {
    // make b monic so zp_mod's monic assumption holds
    u64 lead = b.back();
    if (lead != 1) {
      // lead^{p-2} mod p
      u64 inv = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& x : b) x = static_cast<fe>(u64(x) * inv % p);
    }
    zvec r = zp_mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<u64> prime_factors(u64 m) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fs.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fs.push_back(m);
  return fs;
}

// Irreducibility of a monic degree-n polynomial over Z_p. Trial division while
// the field enumeration stays small, Frobenius/gcd test beyond that.
bool zp_irreducible(const zvec& f, u64 p) {
  std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  u64 qn = 1;
  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i) {
    qn *= p;
    if (qn > 1000000) small = false;
  }
  if (small) {
    for (std::size_t d = 1; 2 * d <= n; ++d) {
      zvec g(d + 1, 0);
      g[d] = 1;
      u64 total = 1;
      for (std::size_t i = 0; i < d; ++i) total *= p;
      for (u64 k = 0; k < total; ++k) {
        u64 t = k;
        for (std::size_t i = 0; i < d; ++i) {
          g[i] = static_cast<fe>(t % p);
          t /= p;
        }
        if (zp_mod(f, g, p).empty()) return false;
      }
    }
    return true;
  }
  // frob[i] = x^{p^i} mod f
  zvec x = {0, 1};
  std::vector<zvec> frob(n + 1);
  frob[0] = x;
  for (std::size_t i = 1; i <= n; ++i) frob[i] = zp_pow_p(frob[i - 1], f, p);
  if (zp_trim(frob[n]) != zp_trim(x)) return false;
  for (u64 l : prime_factors(n)) {
    zvec d = frob[n / l];
    // d - x
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<fe>((u64(d[1]) + p - 1) % p);
    zvec g = zp_gcd(d, f, p);
    if (zp_trim(g).size() > 1) return false;
  }
  return true;
}

}  // namespace

Field::Field(fe p, unsigned n) : p_(p), n_(n) {
  if (p == 2) throw EvenCharacteristic("characteristic 2 is not supported");
  if (!is_prime_u64(p)) throw Error("p must be an odd prime");
  if (n < 1) throw Error("n must be >= 1");
  if (n == 1) {
    mod_ = {0, 1};
  } else {
    // scan monic x^n + c_{n-1}x^{n-1} + ... + c0, comparing (c0,...,c_{n-1})
    // lexicographically with the constant term most significant
    u64 total = 1;
    for (unsigned i = 0; i < n; ++i) {
      total *= p;
      if (total > 100000000ull) throw TooLarge("modulus scan space too large");
    }
    zvec f(n + 1, 0);
    f[n] = 1;
    bool found = false;
    for (u64 k = 0; k < total && !found; ++k) {
      u64 t = k;
      for (unsigned i = 0; i < n; ++i) {
        f[n - 1 - i] = static_cast<fe>(t % p);  // c0 varies slowest
        t /= p;
      }
      if (zp_irreducible(f, p)) found = true;
    }
    if (!found) throw Error("no irreducible modulus found");
    mod_ = f;
  }
  init();
}

Field::Field(fe p, unsigned n, std::vector<fe> modulus) : p_(p), n_(n) {
  if (p == 2) throw EvenCharacteristic("characteristic 2 is not supported");
  if (!is_prime_u64(p)) throw Error("p must be an odd prime");
  if (n < 1) throw Error("n must be >= 1");
  if (modulus.size() != n + 1 || modulus[n] != 1) throw Error("modulus must be monic of degree n");
  for (fe c : modulus)
    if (c >= p) throw Error("modulus coefficient out of range");
  if (!zp_irreducible(modulus, p)) throw Error("modulus is reducible");
  mod_ = std::move(modulus);
  init();
}

void Field::init() {
  if (n_ > 12) throw TooLarge("extension degree too large");
  u64 q = 1;
  for (unsigned i = 0; i < n_; ++i) {
    q *= p_;
    if (q > (1ull << 31)) throw TooLarge("field size exceeds the supported word size");
  }
  q_ = q;

  if (n_ >= 2) {
    // red_[k] row = x^{n+k} mod modulus, k = 0..n-2
    red_.assign(std::size_t(n_ - 1) * n_, 0);
    zvec row(n_, 0);  // x^n mod m = -(m0 + ... + m_{n-1}x^{n-1})
    for (unsigned i = 0; i < n_; ++i) row[i] = static_cast<fe>((p_ - mod_[i]) % p_);
    for (unsigned k = 0; k + 1 < n_; ++k) {
      std::copy(row.begin(), row.end(), red_.begin() + std::size_t(k) * n_);
      // row *= x, reduce the overflow term via the k = 0 row
      fe top = row[n_ - 1];
      for (unsigned i = n_ - 1; i > 0; --i) row[i] = row[i - 1];
      row[0] = 0;
      for (unsigned i = 0; i < n_; ++i)
        row[i] = static_cast<fe>((row[i] + u64(top) * red_[i]) % p_);
    }
    if (q_ <= 65536) {
      digits_.assign(std::size_t(q_) * n_, 0);
      for (u64 a = 0; a < q_; ++a) {
        u64 t = a;
        for (unsigned i = 0; i < n_; ++i) {
          digits_[a * n_ + i] = static_cast<fe>(t % p_);
          t /= p_;
        }
      }
    }
  }

  if (n_ >= 2 && q_ <= 4096) {
    mul_.assign(std::size_t(q_) * q_, 0);
    for (u64 a = 0; a < q_; ++a)
      for (u64 b = a; b < q_; ++b) {
        fe m = mul_slow(static_cast<fe>(a), static_cast<fe>(b));
        mul_[a * q_ + b] = static_cast<std::uint16_t>(m);
        mul_[b * q_ + a] = static_cast<std::uint16_t>(m);
      }
  }
  if (q_ <= 4096) {
    inv_.assign(q_, 0);
    for (u64 a = 1; a < q_; ++a) inv_[a] = static_cast<std::uint16_t>(pow(static_cast<fe>(a), q_ - 2));
  }
  if (q_ <= 10000) {
    chi_.assign(q_, -1);
    chi_[0] = 0;
    for (u64 b = 1; b < q_; ++b) chi_[mul(static_cast<fe>(b), static_cast<fe>(b))] = 1;
  }
}

std::string Field::str() const {
  std::ostringstream os;
  os << p_ << "^" << n_ << "/";
  for (std::size_t i = 0; i < mod_.size(); ++i) {
    if (i) os << ",";
    os << mod_[i];
  }
  return os.str();
}

fe Field::add(fe a, fe b) const {
  if (n_ == 1) {
    fe s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  fe out = 0;
  u64 mult = 1;
  u64 ta = a, tb = b;
  for (unsigned i = 0; i < n_; ++i) {
    fe d = static_cast<fe>(ta % p_ + tb % p_);
    if (d >= p_) d -= p_;
    out += static_cast<fe>(d * mult);
    ta /= p_;
    tb /= p_;
    mult *= p_;
  }
  return out;
}

fe Field::sub(fe a, fe b) const { return add(a, neg(b)); }

fe Field::neg(fe a) const {
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  fe out = 0;
  u64 mult = 1;
  u64 ta = a;
  for (unsigned i = 0; i < n_; ++i) {
    fe d = static_cast<fe>(ta % p_);
    if (d) d = p_ - d;
    out += static_cast<fe>(d * mult);
    ta /= p_;
    mult *= p_;
  }
  return out;
}

fe Field::mul(fe a, fe b) const {
  if (n_ == 1) return static_cast<fe>(u64(a) * b % p_);
  if (!mul_.empty()) return mul_[std::size_t(a) * q_ + b];
  return mul_slow(a, b);
}

fe Field::mul_slow(fe a, fe b) const {
  fe da[16], db[16];
  if (!digits_.empty()) {
    for (unsigned i = 0; i < n_; ++i) {
      da[i] = digits_[std::size_t(a) * n_ + i];
      db[i] = digits_[std::size_t(b) * n_ + i];
    }
  } else {
    u64 ta = a, tb = b;
    for (unsigned i = 0; i < n_; ++i) {
      da[i] = static_cast<fe>(ta % p_);
      db[i] = static_cast<fe>(tb % p_);
      ta /= p_;
      tb /= p_;
    }
  }
  u64 conv[32] = {0};
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) conv[i + j] += u64(da[i]) * db[j];
  u64 res[16];
  for (unsigned i = 0; i < n_; ++i) res[i] = conv[i] % p_;
  for (unsigned k = n_; k <= 2 * n_ - 2; ++k) {
    u64 c = conv[k] % p_;
    if (!c) continue;
    const fe* row = red_.data() + std::size_t(k - n_) * n_;
    for (unsigned i = 0; i < n_; ++i) res[i] = (res[i] + c * row[i]) % p_;
  }
  fe out = 0;
  u64 mult = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += static_cast<fe>(res[i] * mult);
    mult *= p_;
  }
  return out;
}

fe Field::pow(fe a, u64 e) const {
  fe r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

fe Field::inv(fe a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  if (!inv_.empty()) return inv_[a];
  return pow(a, q_ - 2);
}

std::vector<fe> Field::coeffs(fe a) const {
  std::vector<fe> c(n_);
  u64 t = a;
  for (unsigned i = 0; i < n_; ++i) {
    c[i] = static_cast<fe>(t % p_);
    t /= p_;
  }
  return c;
}

fe Field::from_coeffs(const std::vector<fe>& c) const {
  if (c.size() != n_) throw BadLength("coefficient vector has wrong length");
  fe out = 0;
  u64 mult = 1;
  for (unsigned i = 0; i < n_; ++i) {
    if (c[i] >= p_) throw Error("coefficient out of range");
    out += static_cast<fe>(c[i] * mult);
    mult *= p_;
  }
  return out;
}

int Field::quad_char(fe a) const {
  if (a == 0) return 0;
  if (!chi_.empty()) return chi_[a];
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

bool Field::plus_half(fe a) const {
  if (a == 0) throw ZeroElement("no sign at zero");
  return a < neg(a);
}

std::uint64_t Field::element_order(fe a) const {
  if (a == 0) throw ZeroElement("order of zero");
  u64 e = q_ - 1;
  for (u64 f : prime_factors(q_ - 1))
    while (e % f == 0 && pow(a, e / f) == 1) e /= f;
  return e;
}

std::optional<fe> Field::sqrt_min(fe a) const {
  if (a == 0) return 0;
  if (quad_char(a) != 1) return std::nullopt;
  for (u64 b = 1; b < q_; ++b)
    if (mul(static_cast<fe>(b), static_cast<fe>(b)) == a) return static_cast<fe>(b);
  return std::nullopt;
}

bool binomial_irreducible(const Field& F, unsigned t, fe mu) {
  if (t < 2) throw Error("t must be >= 2");
  if (mu == 0) throw ZeroElement("binomial constant must be nonzero");
  u64 e = F.element_order(mu);
  u64 co = (F.q() - 1) / e;
  for (u64 l : prime_factors(t)) {
    if (e % l != 0) return false;
    if (co % l == 0) return false;
  }
  if (t % 4 == 0 && (F.q() - 1) % 4 != 0) return false;
  return true;
}

std::optional<fe> find_binomial_mu(const Field& F, unsigned t) {
  if (t < 3 || t % 2 == 0) throw Error("t must be odd and >= 3");
  for (u64 mu = 1; mu < F.q(); ++mu)
    if (binomial_irreducible(F, t, static_cast<fe>(mu))) return static_cast<fe>(mu);
  return std::nullopt;
}

}  // namespace er
