#pragma once
#include <vector>

#include "er/graph.hpp"
#include "er/polarity.hpp"
#include "er/tower.hpp"

namespace er {

// ---------------------------------------------------------------------------
// Affine-graph automorphisms used by both coloring pipelines.

// (x, y) -> (x + k, y + 4kx + 2k^2)
template <FiniteField F>
std::uint32_t shear_auto(const F& K, fe k, std::uint32_t v) {
  AffineCodec<F> ac(K);
  auto [x, y] = ac.decode(v);
  fe x2 = K.add(x, k);
  fe y2 = K.add(y, K.add(K.mul(K.scalar(4), K.mul(k, x)), K.mul(K.scalar(2), K.mul(k, k))));
  return ac.id(x2, y2);
}

// (x, y) -> (kx, k^2 y), k != 0
template <FiniteField F>
std::uint32_t scale_auto(const F& K, fe k, std::uint32_t v) {
  if (k == 0) throw ZeroScale("scale parameter must be nonzero");
  AffineCodec<F> ac(K);
  auto [x, y] = ac.decode(v);
  return ac.id(K.mul(k, x), K.mul(K.mul(k, k), y));
}

// ---------------------------------------------------------------------------
// Square case: q = q0^2, GF(q) = base(theta) with theta^2 = mu1 theta + mu0.
struct QuadSplit {
  const Field& base;
  Tower T;  // lex-least quadratic modulus over the base
  fe mu1, mu0;
  explicit QuadSplit(const Field& b) : base(b), T(Tower::quadratic_lex(b)) {
    mu1 = b.neg(T.modulus()[1]);
    mu0 = b.neg(T.modulus()[0]);
  }
  std::uint32_t Q() const { return std::uint32_t(T.q()); }  // q0^2
};

// Every affine vertex is either in one shifted-split class (shear parameter k
// and a sign) or in the residual set; membership is decided by the theta-digit
// of the second coordinate against 4 s1 s0 + 2 s1^2 mu1.
struct SqClass {
  bool residual;
  fe k;       // shear digit (base index); for residual vertices the class label s
  bool plus;  // sign within the split, meaningful when !residual
};

inline SqClass classify_square(const QuadSplit& D, std::uint32_t v) {
  const Field& B = D.base;
  const Tower& T = D.T;
  std::uint32_t Q = D.Q();
  fe s = fe(v / Q), t = fe(v % Q);
  fe s0 = T.digit(s, 0), s1 = T.digit(s, 1), t1 = T.digit(t, 1);
  fe rhs = B.add(B.mul(B.scalar(4), B.mul(s1, s0)),
                 B.mul(B.scalar(2), B.mul(B.mul(s1, s1), D.mu1)));
  if (t1 == rhs) return {true, s1, false};
  return {false, s1, B.plus_half(B.sub(t1, rhs))};
}

inline std::vector<std::uint32_t> residual_vertices(const QuadSplit& D) {
  std::vector<std::uint32_t> xs;
  std::uint64_t nn = std::uint64_t(D.Q()) * D.Q();
  for (std::uint64_t v = 0; v < nn; ++v)
    if (classify_square(D, std::uint32_t(v)).residual) xs.push_back(std::uint32_t(v));
  return xs;
}

// The one neighbor of a residual vertex inside a different residual class.
inline std::uint32_t residual_neighbor_in_class(const QuadSplit& D, std::uint32_t v, fe tgt) {
  const Field& B = D.base;
  const Tower& T = D.T;
  auto cls = classify_square(D, v);
  if (!cls.residual) throw Error("vertex is not residual");
  fe s = cls.k;
  if (tgt == s) throw SameClass("target class equals the vertex's own class");
  if (tgt >= B.q()) throw Error("class label out of range");
  fe s2 = T.digit(fe(v / D.Q()), 0);
  fe t2 = T.digit(fe(v % D.Q()), 0);
  fe half = B.inv(B.scalar(2));
  fe u2 = B.add(s2, B.mul(half, B.mul(D.mu1, B.sub(s, tgt))));
  fe sum = B.add(s2, u2);
  fe st = B.add(s, tgt);
  fe v2 = B.sub(B.add(B.mul(B.mul(st, st), D.mu0), B.mul(sum, sum)), t2);
  fe tU = B.add(B.mul(B.scalar(2), B.mul(B.mul(tgt, tgt), D.mu1)),
                B.mul(B.scalar(4), B.mul(tgt, u2)));
  fe first = T.from_digits({u2, tgt});
  fe second = T.from_digits({v2, tU});
  return std::uint32_t(first) * D.Q() + second;
}

// Exhaustive unique-neighbor law: every residual vertex has exactly one
// neighbor in each other residual class, and it is the one the closed form
// returns.
struct UniqueNeighborScan {
  bool ok = true;
  std::uint64_t checked = 0;
};

inline UniqueNeighborScan unique_neighbor_scan(const QuadSplit& D) {
  const Tower& T = D.T;
  AffineCodec<Tower> ac(T);
  auto xs = residual_vertices(D);
  std::vector<std::vector<std::uint32_t>> by_class(D.base.q());
  for (auto v : xs) by_class[classify_square(D, v).k].push_back(v);
  UniqueNeighborScan res;
  for (auto v : xs) {
    fe own = classify_square(D, v).k;
    for (fe tgt = 0; tgt < D.base.q(); ++tgt) {
      if (tgt == own) continue;
      std::uint32_t u = residual_neighbor_in_class(D, v, tgt);
      auto cu = classify_square(D, u);
      if (!gq_adjacent(T, ac.decode(v), ac.decode(u)) || !cu.residual || cu.k != tgt) {
        res.ok = false;
        return res;
      }
      std::uint32_t cnt = 0;
      for (auto w : by_class[tgt])
        if (gq_adjacent(T, ac.decode(v), ac.decode(w))) ++cnt;
      if (cnt != 1) {
        res.ok = false;
        return res;
      }
      ++res.checked;
    }
  }
  return res;
}

struct SquareColorReport {
  std::uint64_t q0 = 0, q = 0;
  std::vector<std::uint32_t> h_color;   // extension-graph vertex ids
  std::vector<std::uint32_t> er_color;  // transported via the vertex map
  std::uint32_t palette = 0;            // distinct colors used
  std::uint32_t bound = 0;              // 4 q0 + 1
  std::uint64_t split_size = 0, residual_size = 0;
  std::uint32_t residual_colors = 0;  // width of the residual greedy block
  std::uint32_t claim1_max = 0;       // max degree within one residual class
  std::uint32_t claim2_max = 0;       // max degree within the whole residual set
  std::uint64_t er_violations = 0;    // 0 = proper on the polarity graph
};

// Proper coloring of the q = q0^2 polarity graph with at most 4 q0 + 1 colors:
// split classes get color 2k+sign, the residual set gets a fresh greedy block,
// the class vertices one fresh color, the apex the least color absent from its
// neighborhood. Properness is certified on the actual polarity graph.
inline SquareColorReport color_square(const Field& base) {
  QuadSplit D(base);
  const Tower& T = D.T;
  const std::uint32_t q0 = std::uint32_t(base.q());
  const std::uint32_t Q = D.Q();
  HLayout<Tower> hl(T);
  SquareColorReport rep;
  rep.q0 = q0;
  rep.q = Q;
  rep.bound = 4 * q0 + 1;

  std::vector<std::uint32_t> color(hl.n(), UINT32_MAX);
  std::vector<std::uint32_t> xs;
  for (std::uint32_t v = 0; v < Q * Q; ++v) {
    auto c = classify_square(D, v);
    if (c.residual)
      xs.push_back(v);
    else
      color[v] = 2 * c.k + (c.plus ? 0 : 1);
  }
  rep.split_size = std::uint64_t(Q) * Q - xs.size();
  rep.residual_size = xs.size();

  // residual block: greedy on a degeneracy order of the induced subgraph
  Graph gx(std::uint32_t(xs.size()));
  AffineCodec<Tower> ac(T);
  for (std::uint32_t i = 0; i < xs.size(); ++i)
    for (std::uint32_t j = i + 1; j < xs.size(); ++j)
      if (gq_adjacent(T, ac.decode(xs[i]), ac.decode(xs[j]))) gx.add_edge(i, j);
  Coloring cx = greedy_color(gx, degeneracy_order(gx).order);
  rep.residual_colors = cx.palette;
  for (std::uint32_t i = 0; i < xs.size(); ++i) color[xs[i]] = 2 * q0 + cx.color[i];

  // claims: within-class and within-residual degree bounds
  std::vector<std::uint32_t> deg_in_class(xs.size(), 0), deg_in_res(xs.size(), 0);
  for (std::uint32_t i = 0; i < xs.size(); ++i)
    for (std::uint32_t j = i + 1; j < xs.size(); ++j)
      if (gx.test(i, j)) {
        ++deg_in_res[i];
        ++deg_in_res[j];
        if (classify_square(D, xs[i]).k == classify_square(D, xs[j]).k) {
          ++deg_in_class[i];
          ++deg_in_class[j];
        }
      }
  for (std::uint32_t i = 0; i < xs.size(); ++i) {
    rep.claim1_max = std::max(rep.claim1_max, deg_in_class[i]);
    rep.claim2_max = std::max(rep.claim2_max, deg_in_res[i]);
  }

  // class vertices: one fresh color; apex: least color absent from its
  // neighborhood
  std::uint32_t zcolor = 2 * q0 + cx.palette;
  for (std::uint32_t i = 1; i <= Q; ++i) color[hl.z_id(i)] = zcolor;
  {
    std::vector<char> seen(zcolor + 2, 0);
    for (std::uint32_t i = 1; i <= Q; ++i) seen[color[hl.z_id(i)]] = 1;
    std::uint32_t c = 0;
    while (seen[c]) ++c;
    color[hl.y_id()] = c;
  }
  rep.h_color = color;

  std::vector<char> used(zcolor + 2, 0);
  for (auto c : color) used[c] = 1;
  for (std::uint32_t c = 0; c < used.size(); ++c) rep.palette += used[c];

  // certify on the polarity graph
  Graph er = build_er(T);
  rep.er_color.assign(er.n(), UINT32_MAX);
  for (std::uint32_t v = 0; v < hl.n(); ++v) rep.er_color[phi_h_to_er(T, v)] = color[v];
  rep.er_violations = coloring_violations(er, rep.er_color);
  return rep;
}

}  // namespace er
