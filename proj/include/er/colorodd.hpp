#pragma once
#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "er/colorsq.hpp"
#include "er/field.hpp"
#include "er/graph.hpp"
#include "er/polarity.hpp"
#include "er/rng.hpp"
#include "er/tower.hpp"

namespace er {

// ---------------------------------------------------------------------------
// Residue-class tables for GF(q)(theta), theta^t = mu, t = 2r+1 odd.  The
// theta-digit k of a product collects the digit pairs {i, j} with
// i + j = k (mod t), weighted by mu when the sum wraps past t, plus a single
// square contributor 2*sq[k] = k (mod t).
struct ResidueTables {
  unsigned r, t;
  struct P {
    unsigned i, j;
    bool wrap;
  };
  std::vector<std::vector<P>> pairs;  // indexed by digit k
  std::vector<unsigned> sq;
  std::vector<char> sq_wrap;

  explicit ResidueTables(unsigned r_) : r(r_), t(2 * r_ + 1) {
    if (r_ < 1) throw Error("residue tables need r >= 1");
    pairs.assign(t, {});
    sq.assign(t, 0);
    sq_wrap.assign(t, 0);
    for (unsigned k = 0; k < t; ++k) {
      sq[k] = (k % 2 == 0) ? k / 2 : (k + t) / 2;
      sq_wrap[k] = char(2 * sq[k] >= t);
      for (unsigned i = 0; i < t; ++i)
        for (unsigned j = i + 1; j < t; ++j)
          if ((i + j) % t == k) pairs[k].push_back({i, j, i + j >= t});
    }
    for (unsigned k = 0; k < t; ++k)
      if (pairs[k].size() != r) throw Error("pair table size mismatch");
  }
};

// 2 z_r^2 + 4 sum_{j<r} z_j z_{2r-j}: the top theta-digit of 2 z^2 when z has
// digit vector (z_0..z_2r).
inline fe residual_alpha(const Field& B, unsigned r, const std::vector<fe>& z) {
  if (z.size() != 2 * r + 1) throw BadLength("expected 2r+1 digits");
  fe acc = B.mul(B.scalar(2), B.mul(z[r], z[r]));
  for (unsigned j = 0; j < r; ++j)
    acc = B.add(acc, B.mul(B.scalar(4), B.mul(z[j], z[2 * r - j])));
  return acc;
}

namespace detail {
// theta-digit k of z^2 for a digit vector z, i.e. one quadratic form per k.
inline fe square_digit(const Field& B, const ResidueTables& tab, fe mu, const std::vector<fe>& z,
                       unsigned k) {
  fe acc = B.mul(z[tab.sq[k]], z[tab.sq[k]]);
  if (tab.sq_wrap[k]) acc = B.mul(acc, mu);
  for (auto& p : tab.pairs[k]) {
    fe w = B.mul(z[p.i], z[p.j]);
    if (p.wrap) w = B.mul(w, mu);
    acc = B.add(acc, B.mul(B.scalar(2), w));
  }
  return acc;
}
}  // namespace detail

// The t quadratic residues of the degree-difference system: entry k is the
// theta-digit k of z^2.  A common zero marks a digit vector whose square
// vanishes in GF(q)[x]/(x^t - mu); the quotient need not be a field here, so
// mu is only required to be nonzero.
inline std::vector<fe> residual_system(const Field& B, unsigned r, fe mu,
                                       const std::vector<fe>& z) {
  if (mu == 0) throw ZeroElement("mu must be nonzero");
  if (z.size() != 2 * r + 1) throw BadLength("expected 2r+1 digits");
  ResidueTables tab(r);
  std::vector<fe> out(tab.t);
  for (unsigned k = 0; k < tab.t; ++k) out[k] = detail::square_digit(B, tab, mu, z, k);
  return out;
}

// Number of common zeros of the residual system over GF(q)^t (the zero vector
// included).
inline std::uint64_t count_system_solutions(const Field& B, unsigned r, fe mu) {
  if (mu == 0) throw ZeroElement("mu must be nonzero");
  ResidueTables tab(r);
  const std::uint64_t q = B.q();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < tab.t; ++i) {
    total *= q;
    if (total > 2'000'000) throw TooLarge("solution enumeration capped at 2e6 tuples");
  }
  std::uint64_t count = 0;
  std::vector<fe> z(tab.t);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < tab.t; ++i) {
      z[i] = fe(c % q);
      c /= q;
    }
    bool zero = true;
    for (unsigned k = 0; k < tab.t && zero; ++k)
      if (detail::square_digit(B, tab, mu, z, k) != 0) zero = false;
    if (zero) ++count;
  }
  return count;
}

inline std::uint64_t icbrt(unsigned __int128 n) {
  std::uint64_t lo = 0, hi = 2'000'000'000;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    unsigned __int128 c = (unsigned __int128)mid * mid * mid;
    if (c <= n) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

// floor((2r+5)/3 * q^((4r+3)/3)) = floor(cbrt((2r+5)^3 q^(4r+3))) / 3.
inline std::uint64_t system_bound(std::uint64_t q, unsigned r) {
  unsigned __int128 n = 2 * r + 5;
  n = n * n * n;
  const unsigned __int128 cap = (unsigned __int128)1 << 100;
  for (unsigned i = 0; i < 4 * r + 3; ++i) {
    n *= q;
    if (n > cap) throw TooLarge("bound computation overflow");
  }
  return icbrt(n) / 3;
}

// ---------------------------------------------------------------------------
// Odd split: GF(q^t) with t = 2r+1 and a binomial modulus theta^t = mu.
struct OddSplit {
  const Field& base;
  unsigned r, t;
  fe mu;
  Tower T;
  ResidueTables tab;

  OddSplit(const Field& b, unsigned r_, fe mu_)
      : base(b), r(r_), t(2 * r_ + 1), mu(mu_), T(Tower::binomial(b, 2 * r_ + 1, mu_)), tab(r_) {}

  std::uint64_t Q() const { return T.q(); }
  std::uint64_t powq(unsigned e) const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) v *= base.q();
    return v;
  }
};

// Max degree of the subgraph induced on the leftover core {(s, 2 s^2)}.
inline std::uint32_t core_degree_max(const Tower& T) {
  const std::uint64_t Q = T.q();
  std::vector<std::pair<fe, fe>> core(Q);
  for (std::uint64_t s = 0; s < Q; ++s)
    core[s] = {fe(s), T.mul(T.scalar(2), T.mul(fe(s), fe(s)))};
  std::vector<std::uint32_t> deg(Q, 0);
  for (std::uint64_t i = 0; i < Q; ++i)
    for (std::uint64_t j = i + 1; j < Q; ++j)
      if (gq_adjacent(T, core[i], core[j])) {
        ++deg[i];
        ++deg[j];
      }
  std::uint32_t best = 0;
  for (auto d : deg) best = std::max(best, d);
  return best;
}

template <FiniteField F>
std::pair<fe, fe> shear_pair(const F& K, fe k, fe x, fe y) {
  fe x2 = K.add(x, k);
  fe y2 = K.add(y, K.add(K.mul(K.scalar(4), K.mul(k, x)), K.mul(K.scalar(2), K.mul(k, k))));
  return {x2, y2};
}

template <FiniteField F>
std::pair<fe, fe> scale_pair(const F& K, fe k, fe x, fe y) {
  if (k == 0) throw ZeroScale("scale parameter must be nonzero");
  return {K.mul(k, x), K.mul(K.mul(k, k), y)};
}

// Membership of (s, t) in the residual set: top theta-digit of t equals the
// top theta-digit of 2 s^2.
inline bool residual_pair(const OddSplit& D, fe s, fe t) {
  return D.T.digit(t, 2 * D.r) == residual_alpha(D.base, D.r, D.T.digits(s));
}

struct OddClass {
  bool residual;
  std::uint32_t rank;  // digits s_r..s_2r of the first coordinate, s_r least significant
  bool plus;
};

// Non-residual vertices carry a class label: the shear digits recovered from
// the first coordinate plus the sign half of the top-digit defect.
inline OddClass classify_pair(const OddSplit& D, fe s, fe t) {
  fe a = residual_alpha(D.base, D.r, D.T.digits(s));
  fe delta = D.base.sub(D.T.digit(t, 2 * D.r), a);
  if (delta == 0) return {true, 0, false};
  return {false, std::uint32_t(s / D.powq(D.r)), D.base.plus_half(delta)};
}

// Expected second coordinate of a core vertex, digit by digit from the
// residue-class tables (equals 2 s^2 computed in the tower).
inline fe expected_second(const OddSplit& D, fe s) {
  auto sd = D.T.digits(s);
  std::vector<fe> td(D.t);
  for (unsigned k = 0; k < D.t; ++k)
    td[k] = D.base.mul(D.base.scalar(2), detail::square_digit(D.base, D.tab, D.mu, sd, k));
  return D.T.from_digits(td);
}

// First scaling power theta^l (l in [1, 2r]) whose image of (s, t) leaves the
// residual set; 0 when every image stays inside (the core).
inline unsigned layer_of(const OddSplit& D, fe s, fe t) {
  fe pw = 1;
  for (unsigned l = 1; l <= 2 * D.r; ++l) {
    pw = D.T.mul(pw, D.T.theta());
    auto [s2, t2] = scale_pair(D.T, pw, s, t);
    if (!residual_pair(D, s2, t2)) return l;
  }
  return 0;
}

// ---------------------------------------------------------------------------
struct OddColorReport {
  std::uint64_t q = 0;  // extension size q_base^t
  std::uint64_t qbase = 0;
  unsigned r = 0, t = 0;
  fe mu = 0;
  std::vector<std::uint32_t> h_color;   // extension-graph vertex ids
  std::vector<std::uint32_t> er_color;  // transported; empty unless graph_verify
  std::uint32_t palette = 0;
  std::uint64_t bound = 0;  // 2 q^{r+1} (2r+1) + solution_bound + 1
  bool bound_ok = false;
  std::vector<std::uint64_t> layer_sizes;  // [split, layer 1, ..., layer 2r]
  std::uint64_t core_size = 0;
  std::uint32_t core_max_degree = 0;
  std::uint32_t core_colors = 0;         // width of the core greedy block
  std::uint32_t split_layer_colors = 0;  // distinct colors below the core block
  std::uint64_t system_solutions = 0;
  std::uint64_t solution_bound = 0;
  std::uint64_t h_violations = 0;   // formula-level edge walk
  std::uint64_t er_violations = 0;  // polarity-graph certification
  bool graph_verified = false;
};

// Proper coloring of the extension graph for q = q_base^(2r+1): split classes
// get color 2*rank+sign, each scaling layer a fresh copy of that palette via
// its exit image, the core a greedy block, the class vertices one fresh
// color, the apex the least color absent from its neighborhood.  Properness
// is checked edge by edge from the adjacency formula; graph_verify additionally
// builds the polarity graph and certifies the transported coloring.
inline OddColorReport color_odd(const Field& base, unsigned r, fe mu = 0,
                                bool graph_verify = false) {
  if (mu == 0) {
    auto m = find_binomial_mu(base, 2 * r + 1);
    if (!m) throw NoBinomial("no binomial modulus for this base and degree");
    mu = *m;
  }
  OddSplit D(base, r, mu);
  const Tower& T = D.T;
  if (T.q() > 1024) throw TooLarge("odd coloring capped at extension size 1024");
  const std::uint32_t N = std::uint32_t(T.q());
  HLayout<Tower> hl(T);

  OddColorReport rep;
  rep.q = N;
  rep.qbase = base.q();
  rep.r = r;
  rep.t = D.t;
  rep.mu = mu;

  const std::uint32_t block = std::uint32_t(2 * D.powq(r + 1));
  const std::uint32_t zoff = block * (2 * r + 1);
  rep.layer_sizes.assign(2 * r + 1, 0);

  std::vector<std::uint32_t> color(hl.n(), UINT32_MAX);
  std::vector<std::uint32_t> core;
  for (std::uint32_t s = 0; s < N; ++s)
    for (std::uint32_t t = 0; t < N; ++t) {
      std::uint32_t v = s * N + t;
      auto cl = classify_pair(D, s, t);
      if (!cl.residual) {
        color[v] = 2 * cl.rank + (cl.plus ? 0 : 1);
        ++rep.layer_sizes[0];
        continue;
      }
      unsigned l = layer_of(D, s, t);
      if (l == 0) {
        core.push_back(v);
        continue;
      }
      auto [s2, t2] = scale_pair(T, T.pow(T.theta(), l), s, t);
      auto c2 = classify_pair(D, s2, t2);
      color[v] = block * l + 2 * c2.rank + (c2.plus ? 0 : 1);
      ++rep.layer_sizes[l];
    }
  rep.core_size = core.size();

  // core block: greedy on a degeneracy order of the induced subgraph
  Graph gz(std::uint32_t(core.size()));
  AffineCodec<Tower> ac(T);
  for (std::uint32_t i = 0; i < core.size(); ++i)
    for (std::uint32_t j = i + 1; j < core.size(); ++j)
      if (gq_adjacent(T, ac.decode(core[i]), ac.decode(core[j]))) gz.add_edge(i, j);
  for (std::uint32_t i = 0; i < core.size(); ++i)
    rep.core_max_degree = std::max(rep.core_max_degree, gz.degree(i));
  Coloring cz = greedy_color(gz, degeneracy_order(gz).order);
  rep.core_colors = cz.palette;
  for (std::uint32_t i = 0; i < core.size(); ++i) color[core[i]] = zoff + cz.color[i];

  // class vertices: one fresh color; apex: least color absent from its
  // neighborhood
  std::uint32_t zcolor = zoff + cz.palette;
  for (std::uint32_t i = 1; i <= N; ++i) color[hl.z_id(i)] = zcolor;
  {
    std::vector<char> seen(zcolor + 2, 0);
    for (std::uint32_t i = 1; i <= N; ++i) seen[color[hl.z_id(i)]] = 1;
    std::uint32_t c = 0;
    while (seen[c]) ++c;
    color[hl.y_id()] = c;
  }

  std::vector<char> used(zcolor + 2, 0);
  for (auto c : color) used[c] = 1;
  for (std::uint32_t c = 0; c < used.size(); ++c) {
    rep.palette += used[c];
    if (c < zoff) rep.split_layer_colors += used[c];
  }

  rep.system_solutions = count_system_solutions(base, r, mu);
  rep.solution_bound = system_bound(base.q(), r);
  rep.bound = std::uint64_t(zoff) + rep.solution_bound + 1;
  rep.bound_ok = rep.palette <= rep.bound && rep.split_layer_colors <= zoff &&
                 std::uint64_t(rep.core_max_degree) + 1 <= rep.system_solutions &&
                 rep.system_solutions <= rep.solution_bound;

  // formula-level properness: every affine edge via the connection set, then
  // the class rows and the apex
  std::vector<fe> asq(N);
  for (std::uint32_t a = 0; a < N; ++a) asq[a] = T.mul(a, a);
  std::uint64_t viol = 0;
#pragma omp parallel for reduction(+ : viol) schedule(dynamic, 4)
  for (std::int64_t x1 = 0; x1 < std::int64_t(N); ++x1)
    for (std::uint32_t x2 = 0; x2 < N; ++x2) {
      std::uint32_t u = std::uint32_t(x1) * N + x2;
      std::uint32_t cu = color[u];
      for (std::uint32_t a = 0; a < N; ++a) {
        std::uint32_t v = T.sub(a, fe(x1)) * N + T.sub(asq[a], x2);
        if (v > u && color[v] == cu) ++viol;
      }
    }
  for (std::uint32_t i = 1; i <= N; ++i) {
    std::uint32_t zc = color[hl.z_id(i)];
    fe b = hl.b(i);
    for (std::uint32_t t2 = 0; t2 < N; ++t2)
      if (color[std::uint32_t(b) * N + t2] == zc) ++viol;
    if (color[hl.y_id()] == zc) ++viol;
  }
  rep.h_violations = viol;
  rep.h_color = std::move(color);

  if (graph_verify) {
    Graph er = build_er(T);
    rep.er_color.assign(er.n(), UINT32_MAX);
    for (std::uint32_t v = 0; v < hl.n(); ++v) rep.er_color[phi_h_to_er(T, v)] = rep.h_color[v];
    for (auto c : rep.er_color)
      if (c == UINT32_MAX) throw Error("transport left a vertex uncolored");
    rep.er_violations = coloring_violations(er, rep.er_color);
    rep.graph_verified = true;
  }
  return rep;
}

// ---------------------------------------------------------------------------
struct OddClaimsReport {
  bool cover_ok = true;         // sheared half-splits tile the non-residual set
  bool classify_ok = true;      // classification recovers shear digits and sign
  bool independent_ok = true;   // half-splits are independent sets
  bool automorphism_ok = true;  // shear/scale maps preserve adjacency
  bool digit_pin_ok = true;     // scaling images pin one digit of the second coordinate
  bool core_graph_ok = true;    // leftover core == graph of the expected second coordinate
  bool core_system_ok = true;   // core adjacency <=> residual system vanishes on the difference
  bool degree_bound_ok = true;  // core max degree + 1 <= solutions <= bound
  std::uint64_t split_size = 0, x_size = 0, core_size = 0;
  std::vector<std::uint64_t> layer_sizes;  // [split, layer 1, ..., layer 2r]
  std::uint32_t core_max_degree = 0;
  std::uint64_t system_solutions = 0, solution_bound = 0;
  std::uint64_t checked = 0;

  bool ok() const {
    return cover_ok && classify_ok && independent_ok && automorphism_ok && digit_pin_ok &&
           core_graph_ok && core_system_ok && degree_bound_ok;
  }
};

namespace detail {

// Digit identities of one scaling image against the source digits: first
// coordinate rotates with a mu weight; the top digit of the image's second
// coordinate lands on one source digit.
inline bool scale_image_digits_ok(const OddSplit& D, fe s, fe t, unsigned l, fe s2, fe t2) {
  const Field& B = D.base;
  const unsigned r = D.r, tt = D.t;
  auto sd = D.T.digits(s), s2d = D.T.digits(s2);
  for (unsigned i = 0; i < tt; ++i) {
    fe want = (i >= l) ? sd[i - l] : B.mul(D.mu, sd[i - l + tt]);
    if (s2d[i] != want) return false;
  }
  fe top = D.T.digit(t2, 2 * r);
  fe want = (l <= r) ? D.T.digit(t, 2 * r - 2 * l)
                     : B.mul(D.mu, D.T.digit(t, 4 * r + 1 - 2 * l));
  return top == want;
}

inline bool system_vanishes(const OddSplit& D, fe d) {
  auto v = residual_system(D.base, D.r, D.mu, D.T.digits(d));
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

// Exhaustive structural verification of the odd split (small extensions):
// partition, classification, independence, automorphy, digit pinning, core
// identification, and the degree-versus-solution-count comparison.
inline OddClaimsReport verify_odd_claims_exhaustive(const OddSplit& D) {
  if (D.Q() > 1024) throw TooLarge("exhaustive verification capped at extension size 1024");
  const Tower& T = D.T;
  const Field& B = D.base;
  const std::uint64_t N = D.Q(), q = B.q();
  const std::uint64_t qr = D.powq(D.r), qe = D.powq(D.r + 1), q2r = D.powq(2 * D.r);
  OddClaimsReport rep;

  // cover + classification: every sheared half-split element is non-residual,
  // lands on a fresh id, and classifies back to its shear digits and sign
  std::vector<char> mark(N * N, 0);
  for (std::uint64_t cr = 0; cr < qe; ++cr) {
    fe c = fe(cr * qr);
    for (std::uint64_t x = 0; x < qr; ++x)
      for (fe hi = 1; hi < q; ++hi)
        for (std::uint64_t lo = 0; lo < q2r; ++lo) {
          fe y = fe(hi * q2r + lo);
          auto [s, t] = shear_pair(T, c, fe(x), y);
          std::uint64_t id = std::uint64_t(s) * N + t;
          if (mark[id]) rep.cover_ok = false;
          mark[id] = 1;
          auto cl = classify_pair(D, s, t);
          if (cl.residual) rep.cover_ok = false;
          else if (cl.rank != cr || cl.plus != B.plus_half(hi)) rep.classify_ok = false;
          ++rep.checked;
        }
  }
  for (std::uint64_t id = 0; id < N * N; ++id) {
    bool res = residual_pair(D, fe(id / N), fe(id % N));
    if (mark[id] == res) rep.cover_ok = false;  // marked <=> non-residual
    if (mark[id]) ++rep.split_size;
    else ++rep.x_size;
  }

  // independence of both half-splits
  for (int sign = 0; sign < 2; ++sign) {
    std::vector<std::pair<fe, fe>> J;
    for (std::uint64_t x = 0; x < qr; ++x)
      for (fe hi = 1; hi < q; ++hi) {
        if (B.plus_half(hi) != (sign == 0)) continue;
        for (std::uint64_t lo = 0; lo < q2r; ++lo) J.push_back({fe(x), fe(hi * q2r + lo)});
      }
    for (std::size_t i = 0; i < J.size(); ++i)
      for (std::size_t j = i + 1; j < J.size(); ++j, ++rep.checked)
        if (gq_adjacent(T, J[i], J[j])) rep.independent_ok = false;
  }

  // sampled automorphy of shear and scale maps
  {
    SplitMix rng(20260819);
    for (int it = 0; it < 20000; ++it, ++rep.checked) {
      fe su = fe(rng.below(N)), tu = fe(rng.below(N));
      fe sv = fe(rng.below(N)), tv = fe(rng.below(N));
      fe c = fe(rng.below(N));
      fe k = fe(1 + rng.below(N - 1));
      bool adj = gq_adjacent(T, {su, tu}, {sv, tv});
      auto u1 = shear_pair(T, c, su, tu), v1 = shear_pair(T, c, sv, tv);
      auto u2 = scale_pair(T, k, su, tu), v2 = scale_pair(T, k, sv, tv);
      if (gq_adjacent(T, u1, v1) != adj || gq_adjacent(T, u2, v2) != adj)
        rep.automorphism_ok = false;
    }
  }

  // digit pinning over the residual set: the l-th scaling image is residual
  // exactly when digit pos(l) of t matches the expected second coordinate,
  // and the image digits obey the rotation identities
  for (std::uint64_t s = 0; s < N; ++s) {
    fe al = residual_alpha(B, D.r, T.digits(fe(s)));
    fe es = expected_second(D, fe(s));
    if (es != T.mul(T.scalar(2), T.mul(fe(s), fe(s)))) rep.core_graph_ok = false;
    if (T.digit(es, 2 * D.r) != al) rep.core_graph_ok = false;
    for (std::uint64_t lo = 0; lo < q2r; ++lo) {
      fe t = fe(std::uint64_t(al) * q2r + lo);
      for (unsigned l = 1; l <= 2 * D.r; ++l, ++rep.checked) {
        auto [s2, t2] = scale_pair(T, T.pow(T.theta(), l), fe(s), t);
        if (!detail::scale_image_digits_ok(D, fe(s), t, l, s2, t2)) rep.digit_pin_ok = false;
        unsigned pos = (l <= D.r) ? 2 * D.r - 2 * l : 4 * D.r + 1 - 2 * l;
        bool stays = residual_pair(D, s2, t2);
        bool pinned = T.digit(t, pos) == T.digit(es, pos);
        if (stays != pinned) rep.digit_pin_ok = false;
      }
    }
  }

  // core identification and layer census
  rep.layer_sizes.assign(2 * D.r + 1, 0);
  rep.layer_sizes[0] = rep.split_size;
  std::vector<fe> core_s;
  for (std::uint64_t s = 0; s < N; ++s) {
    fe al = residual_alpha(B, D.r, T.digits(fe(s)));
    for (std::uint64_t lo = 0; lo < q2r; ++lo) {
      fe t = fe(std::uint64_t(al) * q2r + lo);
      unsigned l = layer_of(D, fe(s), t);
      if (l == 0) {
        core_s.push_back(fe(s));
        if (t != expected_second(D, fe(s))) rep.core_graph_ok = false;
      } else {
        ++rep.layer_sizes[l];
      }
      ++rep.checked;
    }
  }
  rep.core_size = core_s.size();
  if (core_s.size() != N) rep.core_graph_ok = false;
  std::sort(core_s.begin(), core_s.end());
  if (std::unique(core_s.begin(), core_s.end()) != core_s.end()) rep.core_graph_ok = false;

  // core adjacency <=> vanishing residual system on the digit difference
  std::vector<std::uint32_t> deg(core_s.size(), 0);
  for (std::size_t i = 0; i < core_s.size(); ++i) {
    fe si = core_s[i], ti = expected_second(D, si);
    for (std::size_t j = i + 1; j < core_s.size(); ++j, ++rep.checked) {
      fe sj = core_s[j], tj = expected_second(D, sj);
      bool adj = gq_adjacent(T, {si, ti}, {sj, tj});
      if (adj != detail::system_vanishes(D, T.sub(si, sj))) rep.core_system_ok = false;
      if (adj) {
        ++deg[i];
        ++deg[j];
      }
    }
  }
  for (auto d : deg) rep.core_max_degree = std::max(rep.core_max_degree, d);
  rep.system_solutions = count_system_solutions(B, D.r, D.mu);
  rep.solution_bound = system_bound(q, D.r);
  rep.degree_bound_ok = std::uint64_t(rep.core_max_degree) + 1 <= rep.system_solutions &&
                        rep.system_solutions <= rep.solution_bound;
  return rep;
}

// Sampled structural verification for extensions too large to enumerate.
inline OddClaimsReport verify_odd_claims_sampled(const OddSplit& D, std::uint64_t samples,
                                                 std::uint64_t seed) {
  const Tower& T = D.T;
  const Field& B = D.base;
  const std::uint64_t N = D.Q(), q = B.q();
  const std::uint64_t qr = D.powq(D.r), qe = D.powq(D.r + 1), q2r = D.powq(2 * D.r);
  OddClaimsReport rep;
  SplitMix rng(seed);

  for (std::uint64_t it = 0; it < samples; ++it) {
    // classification of a random sheared half-split element
    {
      std::uint64_t cr = rng.below(qe);
      fe c = fe(cr * qr), x = fe(rng.below(qr));
      fe hi = fe(1 + rng.below(q - 1));
      fe y = fe(std::uint64_t(hi) * q2r + rng.below(q2r));
      auto [s, t] = shear_pair(T, c, x, y);
      auto cl = classify_pair(D, s, t);
      if (cl.residual) rep.cover_ok = false;
      else if (cl.rank != cr || cl.plus != B.plus_half(hi)) rep.classify_ok = false;
    }
    // two same-sign half-split elements are never adjacent
    {
      fe hi1 = fe(1 + rng.below(q - 1)), hi2;
      do hi2 = fe(1 + rng.below(q - 1));
      while (B.plus_half(hi1) != B.plus_half(hi2));
      std::pair<fe, fe> u{fe(rng.below(qr)), fe(std::uint64_t(hi1) * q2r + rng.below(q2r))};
      std::pair<fe, fe> v{fe(rng.below(qr)), fe(std::uint64_t(hi2) * q2r + rng.below(q2r))};
      if (u != v && gq_adjacent(T, u, v)) rep.independent_ok = false;
    }
    // automorphy
    {
      fe su = fe(rng.below(N)), tu = fe(rng.below(N));
      fe sv = fe(rng.below(N)), tv = fe(rng.below(N));
      fe c = fe(rng.below(N)), k = fe(1 + rng.below(N - 1));
      bool adj = gq_adjacent(T, {su, tu}, {sv, tv});
      auto u1 = shear_pair(T, c, su, tu), v1 = shear_pair(T, c, sv, tv);
      auto u2 = scale_pair(T, k, su, tu), v2 = scale_pair(T, k, sv, tv);
      if (gq_adjacent(T, u1, v1) != adj || gq_adjacent(T, u2, v2) != adj)
        rep.automorphism_ok = false;
    }
    // digit pinning at a random residual vertex
    {
      fe s = fe(rng.below(N));
      fe al = residual_alpha(B, D.r, T.digits(s));
      fe t = fe(std::uint64_t(al) * q2r + rng.below(q2r));
      fe es = expected_second(D, s);
      if (es != T.mul(T.scalar(2), T.mul(s, s))) rep.core_graph_ok = false;
      for (unsigned l = 1; l <= 2 * D.r; ++l) {
        auto [s2, t2] = scale_pair(T, T.pow(T.theta(), l), s, t);
        if (!detail::scale_image_digits_ok(D, s, t, l, s2, t2)) rep.digit_pin_ok = false;
        unsigned pos = (l <= D.r) ? 2 * D.r - 2 * l : 4 * D.r + 1 - 2 * l;
        if (residual_pair(D, s2, t2) != (T.digit(t, pos) == T.digit(es, pos)))
          rep.digit_pin_ok = false;
      }
      // the expected second coordinate never leaves; any other residual t
      // must exit at some layer
      if (layer_of(D, s, es) != 0) rep.core_graph_ok = false;
      if (t != es && layer_of(D, s, t) == 0) rep.core_graph_ok = false;
    }
    // core adjacency <=> vanishing system on the difference
    {
      fe s1 = fe(rng.below(N)), s2 = fe(rng.below(N));
      if (s1 != s2) {
        fe t1 = expected_second(D, s1), t2 = expected_second(D, s2);
        bool adj = gq_adjacent(T, {s1, t1}, {s2, t2});
        if (adj != detail::system_vanishes(D, T.sub(s1, s2))) rep.core_system_ok = false;
      }
    }
    rep.checked += 6;
  }
  if (q > 1) {
    std::uint64_t qt = 1;
    bool small = true;
    for (unsigned i = 0; i < D.t && small; ++i) {
      qt *= q;
      if (qt > 2'000'000) small = false;
    }
    if (small) {
      rep.system_solutions = count_system_solutions(B, D.r, D.mu);
      rep.solution_bound = system_bound(q, D.r);
      rep.degree_bound_ok = rep.system_solutions <= rep.solution_bound;
    }
  }
  return rep;
}

}  // namespace er
