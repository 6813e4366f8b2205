#include "er/chrom4.hpp"

#include "er/rng.hpp"

namespace er {

CharSum quad_char_sum_closed(const Field& F, fe a2, fe a1, fe a0) {
  if (a2 == 0) throw ZeroElement("leading coefficient must be nonzero");
  fe disc = F.sub(F.mul(a1, a1), F.mul(F.scalar(4), F.mul(a2, a0)));
  long long chi = F.quad_char(a2);
  if (disc == 0) return {(long long)(F.q() - 1) * chi, true};
  return {-chi, false};
}

long long char_sum_direct(const Field& F, const Poly& f) {
  long long s = 0;
  for (std::uint64_t c = 0; c < F.q(); ++c) s += F.quad_char(poly_eval(F, f, fe(c)));
  return s;
}

WeilCheck weil_check(const Field& F, const Poly& f) {
  int d = poly_deg(f);
  if (d < 1) throw Error("character-sum bound needs a nonconstant polynomial");
  if (poly_const_times_square(F, f)) throw IsSquare("polynomial is a constant times a square");
  WeilCheck r;
  r.sum = char_sum_direct(F, f);
  r.bound_sq = std::uint64_t(d - 1) * std::uint64_t(d - 1) * F.q();
  r.ok = std::uint64_t(r.sum * r.sum) <= r.bound_sq;
  return r;
}

WeilScan weil_random_scan(const Field& F, unsigned degree, std::uint64_t count,
                          std::uint64_t seed) {
  if (degree < 1) throw Error("scan needs degree >= 1");
  WeilScan out;
  const std::uint64_t q = F.q();
  Poly f(degree + 1);
  while (out.tested < count) {
    SplitMix rng(splitmix64(seed ^ (0x5eedull + out.drawn)));
    ++out.drawn;
    for (unsigned i = 0; i < degree; ++i) f[i] = fe(rng.below(q));
    f[degree] = fe(1 + rng.below(q - 1));
    if (!poly_squarefree(F, f)) continue;
    ++out.tested;
    if (!weil_check(F, f).ok) ++out.violations;
  }
  return out;
}

namespace {
bool alphas_dfs(const Field& F, unsigned k, std::vector<fe>& acc) {
  if (acc.size() == k) return true;
  fe from = acc.empty() ? 0 : fe(acc.back() + 1);
  for (std::uint64_t c = from; c < F.q(); ++c) {
    bool ok = true;
    for (fe a : acc)
      if (F.quad_char(F.add(a, fe(c))) != 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    acc.push_back(fe(c));
    if (alphas_dfs(F, k, acc)) return true;
    acc.pop_back();
  }
  return false;
}

bool alphas_enum(const Field& F, unsigned k, std::vector<fe>& acc, fe from) {
  if (acc.size() == k) {
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = i + 1; j < k; ++j)
        if (F.quad_char(F.add(acc[i], acc[j])) != 1) return false;
    return true;
  }
  for (std::uint64_t c = from; c < F.q(); ++c) {
    acc.push_back(fe(c));
    if (alphas_enum(F, k, acc, fe(c + 1))) return true;
    acc.pop_back();
  }
  return false;
}
}  // namespace

std::vector<fe> find_alphas(const Field& F, unsigned k) {
  if (k < 1) throw Error("need k >= 1");
  std::vector<fe> acc;
  if (!alphas_dfs(F, k, acc)) throw SearchExhausted("no admissible tuple in this field");
  return acc;
}

std::vector<fe> find_alphas_bruteforce(const Field& F, unsigned k) {
  if (k < 1) throw Error("need k >= 1");
  std::vector<fe> acc;
  if (!alphas_enum(F, k, acc, 0)) throw SearchExhausted("no admissible tuple in this field");
  return acc;
}

Triangle triangle_solve(const Field& F, fe A, fe B, fe C) {
  fe half = F.inv(F.scalar(2));
  return {F.mul(half, F.sub(F.add(A, C), B)), F.mul(half, F.sub(F.add(A, B), C)),
          F.mul(half, F.sub(F.add(B, C), A))};
}

}  // namespace er
