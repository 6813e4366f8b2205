#pragma once
#include <array>
#include <cstdint>
#include <string>

#include "er/ff.hpp"
#include "er/graph.hpp"

namespace er {

// ---------------------------------------------------------------------------
// Projective points over F, normalized so the first nonzero coordinate is 1.
// Vertex ids: (1,b,c) -> idx(b)*q + idx(c); (0,1,c) -> q^2 + idx(c);
// (0,0,1) -> q^2 + q.
template <FiniteField F>
struct PointCodec {
  const F& K;
  std::uint32_t Q;
  explicit PointCodec(const F& k) : K(k), Q(std::uint32_t(k.q())) {}
  std::uint32_t n() const { return Q * Q + Q + 1; }

  std::array<fe, 3> triple(std::uint32_t id) const {
    if (id < Q * Q) return {1, id / Q, id % Q};
    if (id < Q * Q + Q) return {0, 1, id - Q * Q};
    if (id == Q * Q + Q) return {0, 0, 1};
    throw Error("point id out of range");
  }
  std::uint32_t id(fe x0, fe x1, fe x2) const {
    if (x0 != 0) {
      fe s = K.inv(x0);
      return K.mul(x1, s) * Q + K.mul(x2, s);
    }
    if (x1 != 0) return Q * Q + K.mul(x2, K.inv(x1));
    if (x2 != 0) return Q * Q + Q;
    throw Error("zero vector is not a projective point");
  }
};

// Orthogonal-polarity adjacency on projective triples: u0 v2 + u2 v0 = u1 v1.
// At u = v this is the absolute-point condition.
template <FiniteField F>
bool er_adjacent(const F& K, const std::array<fe, 3>& u, const std::array<fe, 3>& v) {
  fe lhs = K.add(K.mul(u[0], v[2]), K.mul(u[2], v[0]));
  return lhs == K.mul(u[1], v[1]);
}

// Polarity graph on q^2+q+1 points; loops mark the q+1 absolute points and are
// kept out-of-band. Each vertex's row is filled by walking its polar line, so
// rows are owned per-vertex and the fill parallelizes cleanly.
template <FiniteField F>
Graph build_er(const F& K) {
  PointCodec<F> pc(K);
  const std::uint32_t Q = pc.Q;
  Graph g(pc.n());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t uid = 0; uid < std::int64_t(pc.n()); ++uid) {
    const std::uint32_t u = std::uint32_t(uid);
    auto p = pc.triple(u);
    // the polar line of u: A x0 + B x1 + C x2 = 0
    const fe A = p[2], B = K.neg(p[1]), C = p[0];
    if (C != 0) {
      const fe ci = K.inv(C);
      for (std::uint32_t x = 0; x < Q; ++x) {
        fe x2 = K.neg(K.mul(ci, K.add(A, K.mul(B, x))));
        std::uint32_t v = x * Q + x2;
        if (v != u) g.set_arc(u, v);
      }
      std::uint32_t v = Q * Q + K.neg(K.mul(B, ci));
      if (v != u) g.set_arc(u, v);
    } else if (B != 0) {
      const fe x1 = K.neg(K.div(A, B));
      for (std::uint32_t x2 = 0; x2 < Q; ++x2) {
        std::uint32_t v = x1 * Q + x2;
        if (v != u) g.set_arc(u, v);
      }
      if (u != Q * Q + Q) g.set_arc(u, Q * Q + Q);
    } else {
      for (std::uint32_t x2 = 0; x2 < Q; ++x2) {
        std::uint32_t v = Q * Q + x2;
        if (v != u) g.set_arc(u, v);
      }
      if (u != Q * Q + Q) g.set_arc(u, Q * Q + Q);
    }
  }
  for (std::uint32_t u = 0; u < pc.n(); ++u)
    if (er_adjacent(K, pc.triple(u), pc.triple(u))) g.add_loop(u);
  g.finalize_loops();
  return g;
}

// Pairwise-relation reference for the fast builder.
template <FiniteField F>
Graph build_er_reference(const F& K) {
  PointCodec<F> pc(K);
  Graph g(pc.n());
  for (std::uint32_t u = 0; u < pc.n(); ++u) {
    auto pu = pc.triple(u);
    if (er_adjacent(K, pu, pu)) g.add_loop(u);
    for (std::uint32_t v = u + 1; v < pc.n(); ++v)
      if (er_adjacent(K, pu, pc.triple(v))) g.add_edge(u, v);
  }
  g.finalize_loops();
  return g;
}

// ---------------------------------------------------------------------------
// Affine companion graph on F x F: (x1,x2) ~ (y1,y2) iff (x1+y1)^2 = x2+y2.
// Vertex id = idx(x1)*q + idx(x2). Loops sit at (x, 2x^2).
template <FiniteField F>
struct AffineCodec {
  const F& K;
  std::uint32_t Q;
  explicit AffineCodec(const F& k) : K(k), Q(std::uint32_t(k.q())) {}
  std::uint32_t id(fe x1, fe x2) const { return x1 * Q + x2; }
  std::pair<fe, fe> decode(std::uint32_t v) const { return {v / Q, v % Q}; }
};

template <FiniteField F>
bool gq_adjacent(const F& K, std::pair<fe, fe> u, std::pair<fe, fe> v) {
  fe s = K.add(u.first, v.first);
  return K.mul(s, s) == K.add(u.second, v.second);
}

template <FiniteField F>
Graph build_gq(const F& K) {
  AffineCodec<F> ac(K);
  const std::uint32_t Q = ac.Q;
  Graph g(Q * Q);
#pragma omp parallel for schedule(static)
  for (std::int64_t uid = 0; uid < std::int64_t(Q) * Q; ++uid) {
    const std::uint32_t u = std::uint32_t(uid);
    const fe x1 = fe(u / Q), x2 = fe(u % Q);
    for (std::uint32_t a = 0; a < Q; ++a) {
      fe y1 = K.sub(fe(a), x1);
      fe y2 = K.sub(K.mul(fe(a), fe(a)), x2);
      std::uint32_t v = ac.id(y1, y2);
      if (v != u) g.set_arc(u, v);
    }
  }
  for (std::uint32_t x1 = 0; x1 < Q; ++x1)
    g.add_loop(ac.id(x1, K.mul(K.scalar(2), K.mul(x1, x1))));
  g.finalize_loops();
  return g;
}

template <FiniteField F>
Graph build_gq_reference(const F& K) {
  AffineCodec<F> ac(K);
  const std::uint32_t Q = ac.Q;
  Graph g(Q * Q);
  for (std::uint32_t u = 0; u < Q * Q; ++u) {
    if (gq_adjacent(K, ac.decode(u), ac.decode(u))) g.add_loop(u);
    for (std::uint32_t v = u + 1; v < Q * Q; ++v)
      if (gq_adjacent(K, ac.decode(u), ac.decode(v))) g.add_edge(u, v);
  }
  g.finalize_loops();
  return g;
}

// ---------------------------------------------------------------------------
// Extension of the affine graph by q class vertices and one apex: vertex ids
// [0, q^2) affine, q^2 + (i-1) the class vertex over first-coordinate value
// b_i (b_i = element of index i for i < q, b_q = 0), and q^2 + q the apex,
// adjacent to every class vertex.
template <FiniteField F>
struct HLayout {
  const F& K;
  std::uint32_t Q;
  explicit HLayout(const F& k) : K(k), Q(std::uint32_t(k.q())) {}
  std::uint32_t n() const { return Q * Q + Q + 1; }
  std::uint32_t z_id(std::uint32_t i) const {  // i in [1, Q]
    if (i < 1 || i > Q) throw NotHVertex("class index out of range");
    return Q * Q + (i - 1);
  }
  std::uint32_t y_id() const { return Q * Q + Q; }
  fe b(std::uint32_t i) const {  // coset representative for class i
    if (i < 1 || i > Q) throw NotHVertex("class index out of range");
    return i < Q ? fe(i) : 0;
  }
};

template <FiniteField F>
Graph build_hq(const F& K) {
  HLayout<F> hl(K);
  AffineCodec<F> ac(K);
  const std::uint32_t Q = hl.Q;
  Graph g(hl.n());
#pragma omp parallel for schedule(static)
  for (std::int64_t uid = 0; uid < std::int64_t(Q) * Q; ++uid) {
    const std::uint32_t u = std::uint32_t(uid);
    const fe x1 = fe(u / Q), x2 = fe(u % Q);
    for (std::uint32_t a = 0; a < Q; ++a) {
      fe y1 = K.sub(fe(a), x1);
      fe y2 = K.sub(K.mul(fe(a), fe(a)), x2);
      std::uint32_t v = ac.id(y1, y2);
      if (v != u) g.set_arc(u, v);
    }
  }
  for (std::uint32_t i = 1; i <= Q; ++i) {
    std::uint32_t z = hl.z_id(i);
    for (std::uint32_t t = 0; t < Q; ++t) g.add_edge(z, ac.id(hl.b(i), fe(t)));
    g.add_edge(hl.y_id(), z);
  }
  for (std::uint32_t x1 = 0; x1 < Q; ++x1)
    g.add_loop(ac.id(x1, K.mul(K.scalar(2), K.mul(x1, x1))));
  g.finalize_loops();
  return g;
}

// The vertex map realizing the extended affine graph inside the polarity
// graph: affine (a,b) -> (1, a, (b - a^2)/2); class i -> (0, 1, b_i);
// apex -> (0, 0, 1).
template <FiniteField F>
std::uint32_t phi_h_to_er(const F& K, std::uint32_t hid) {
  HLayout<F> hl(K);
  PointCodec<F> pc(K);
  const std::uint32_t Q = hl.Q;
  const fe half = K.inv(K.scalar(2));
  if (hid < Q * Q) {
    fe a = fe(hid / Q), b = fe(hid % Q);
    fe c = K.mul(half, K.sub(b, K.mul(a, a)));
    return pc.id(1, a, c);
  }
  if (hid < Q * Q + Q) return pc.id(0, 1, hl.b(hid - Q * Q + 1));
  if (hid == Q * Q + Q) return pc.id(0, 0, 1);
  throw NotHVertex("vertex id out of range");
}

struct EmbeddingReport {
  bool iso_ok;
  bool loops_ok;
  bool induced_ok;
  bool case1_ok;
  bool ok() const { return iso_ok && loops_ok && induced_ok && case1_ok; }
};

// Checks that the extension is isomorphic to the polarity graph, that the q
// affine relation loops land on absolute points with the apex image as the
// one absolute left over, that the affine part embeds induced, and that the
// neighborhood of each (1, 0, c) image matches its closed form.
template <FiniteField F>
EmbeddingReport verify_embedding(const F& K) {
  HLayout<F> hl(K);
  PointCodec<F> pc(K);
  const std::uint32_t Q = hl.Q;
  Graph H = build_hq(K);
  Graph ER = build_er(K);
  std::vector<std::uint32_t> f(H.n());
  for (std::uint32_t v = 0; v < H.n(); ++v) f[v] = phi_h_to_er(K, v);
  EmbeddingReport rep{};
  rep.iso_ok = verify_vertex_map(H, ER, f, MapMode::Isomorphism);

  std::vector<std::uint32_t> mapped_loops;
  for (std::uint32_t v : H.loops()) mapped_loops.push_back(f[v]);
  mapped_loops.push_back(f[hl.y_id()]);
  std::sort(mapped_loops.begin(), mapped_loops.end());
  rep.loops_ok = mapped_loops == ER.loops();

  Graph G = build_gq(K);
  std::vector<std::uint32_t> fg(f.begin(), f.begin() + std::size_t(Q) * Q);
  rep.induced_ok = verify_vertex_map(G, ER, fg, MapMode::InducedEmbedding);

  rep.case1_ok = true;
  const fe half = K.inv(K.scalar(2));
  for (std::uint32_t j = 0; j < Q; ++j) {
    fe c = K.mul(half, fe(j));  // image of affine (0, b_j) is (1, 0, c)
    std::uint32_t u = pc.id(1, 0, c);
    std::vector<std::uint32_t> expect;
    expect.push_back(pc.id(0, 1, 0));
    for (std::uint32_t x = 0; x < Q; ++x) {
      std::uint32_t v = pc.id(1, fe(x), K.neg(c));
      if (v != u) expect.push_back(v);
    }
    std::sort(expect.begin(), expect.end());
    if (ER.neighbors(u) != expect) rep.case1_ok = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Printable vertex names (field element indices): affine "a:x1,x2", class
// vertex "z:i", apex "y", projective point "p:x0,x1,x2".
template <FiniteField F>
std::string h_vertex_name(const F& K, std::uint32_t hid) {
  HLayout<F> hl(K);
  const std::uint32_t Q = hl.Q;
  if (hid < Q * Q)
    return "a:" + std::to_string(hid / Q) + "," + std::to_string(hid % Q);
  if (hid < Q * Q + Q) return "z:" + std::to_string(hid - Q * Q + 1);
  if (hid == Q * Q + Q) return "y";
  throw NotHVertex("vertex id out of range");
}

template <FiniteField F>
std::string er_vertex_name(const F& K, std::uint32_t id) {
  PointCodec<F> pc(K);
  auto t = pc.triple(id);
  return "p:" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

}  // namespace er
