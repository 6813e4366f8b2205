#include "er/poly.hpp"

namespace er {

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int poly_deg(const Poly& f) {
  for (std::size_t i = f.size(); i > 0; --i)
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  return -1;
}

fe poly_eval(const Field& F, const Poly& f, fe x) {
  fe r = 0;
  for (std::size_t i = f.size(); i > 0; --i) r = F.add(F.mul(r, x), f[i - 1]);
  return r;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    fe x = i < a.size() ? a[i] : 0;
    fe y = i < b.size() ? b[i] : 0;
    c[i] = F.add(x, y);
  }
  return poly_trim(std::move(c));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  return poly_trim(std::move(c));
}

Poly poly_scale(const Field& F, fe c, const Poly& a) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return poly_trim(std::move(r));
}

Poly poly_deriv(const Field& F, const Poly& f) {
  if (f.size() < 2) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(F.scalar(i % F.p()), f[i]);
  return poly_trim(std::move(d));
}

Poly poly_mod(const Field& F, Poly f, const Poly& g) {
  Poly gg = poly_trim(g);
  if (gg.empty()) throw DivisionByZero("polynomial division by zero");
  fe lead_inv = F.inv(gg.back());
  f = poly_trim(std::move(f));
  while (f.size() >= gg.size()) {
    fe c = F.mul(f.back(), lead_inv);
    std::size_t shift = f.size() - gg.size();
    for (std::size_t i = 0; i < gg.size(); ++i)
      f[shift + i] = F.sub(f[shift + i], F.mul(c, gg[i]));
    f = poly_trim(std::move(f));
  }
  return f;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) a = poly_scale(F, F.inv(a.back()), a);
  return a;
}

bool poly_irreducible(const Field& F, const Poly& f) {
  Poly ff = poly_trim(f);
  int n = poly_deg(ff);
  if (n <= 0) return false;
  if (n == 1) return true;
  for (int d = 1; 2 * d <= n; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= F.q();
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t t = k;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<fe>(t % F.q());
        t /= F.q();
      }
      if (poly_mod(F, ff, g).empty()) return false;
    }
  }
  return true;
}

bool poly_squarefree(const Field& F, const Poly& f) {
  Poly d = poly_deriv(F, f);
  if (poly_trim(d).empty()) return false;  // p-th power (or constant)
  return poly_deg(poly_gcd(F, f, d)) <= 0;
}

bool poly_const_times_square(const Field& F, const Poly& f) {
  Poly ff = poly_trim(f);
  int n = poly_deg(ff);
  if (n <= 0) return n == 0;  // nonzero constants are c * 1^2
  if (n % 2 != 0) return false;
  int h = n / 2;
  Poly g(h + 1, 0);
  g[h] = 1;
  std::uint64_t total = 1;
  for (int i = 0; i < h; ++i) total *= F.q();
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t t = k;
    for (int i = 0; i < h; ++i) {
      g[i] = static_cast<fe>(t % F.q());
      t /= F.q();
    }
    if (poly_scale(F, ff.back(), poly_mul(F, g, g)) == ff) return true;
  }
  return false;
}

bool binomial_irreducible_bruteforce(const Field& F, unsigned t, fe mu) {
  if (t < 2) throw Error("t must be >= 2");
  if (mu == 0) throw ZeroElement("binomial constant must be nonzero");
  Poly f(t + 1, 0);
  f[0] = F.neg(mu);
  f[t] = 1;
  return poly_irreducible(F, f);
}

}  // namespace er
