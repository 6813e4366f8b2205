#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "er/colorsq.hpp"

using namespace er;

TEST_CASE("affine automorphisms") {
  Field F3(3, 1);
  QuadSplit D(F3);
  const Tower& T = D.T;
  AffineCodec<Tower> ac(T);

  // shear by theta moves the origin to (theta, 2 theta^2) = (theta, 1)
  CHECK(shear_auto(T, T.theta(), ac.id(0, 0)) == ac.id(3, 1));

  Graph g = build_gq(T);
  std::vector<fe> ks = {1, 2, 3, 5, 8};
  for (fe k : ks)
    for (std::uint32_t u = 0; u < g.n(); ++u)
      for (std::uint32_t v = u + 1; v < g.n(); ++v) {
        CHECK(g.test(u, v) == g.test(shear_auto(T, k, u), shear_auto(T, k, v)));
        CHECK(g.test(u, v) == g.test(scale_auto(T, k, u), scale_auto(T, k, v)));
      }

  // shear is additive, scale multiplicative
  for (fe a : ks)
    for (fe b : ks)
      for (std::uint32_t v : {0u, 13u, 44u, 80u}) {
        CHECK(shear_auto(T, a, shear_auto(T, b, v)) == shear_auto(T, T.add(a, b), v));
        CHECK(scale_auto(T, a, scale_auto(T, b, v)) == scale_auto(T, T.mul(a, b), v));
      }
  CHECK_THROWS_AS(scale_auto(T, 0, 5u), ZeroScale);
}

TEST_CASE("classification") {
  Field F3(3, 1);
  QuadSplit D(F3);
  CHECK(D.mu1 == 0);
  CHECK(D.mu0 == 2);
  AffineCodec<Tower> ac(D.T);

  auto c1 = classify_square(D, ac.id(0, 3));  // (0, theta)
  CHECK(!c1.residual);
  CHECK(c1.k == 0);
  CHECK(c1.plus);

  auto c2 = classify_square(D, ac.id(0, 0));
  CHECK(c2.residual);
  CHECK(c2.k == 0);

  auto c3 = classify_square(D, ac.id(3, 0));  // (theta, 0): rhs digit is 2 mu1 = 0
  CHECK(c3.residual);
  CHECK(c3.k == 1);

  // partition sizes: 2 q0 split classes of q0^2 (q0-1)/2 each, residual q0^3
  for (fe q0 : {3, 5}) {
    Field B(q0, 1);
    QuadSplit DD(B);
    std::uint32_t Q = DD.Q();
    std::map<std::pair<fe, bool>, std::uint64_t> split_sizes;
    std::uint64_t residual = 0;
    for (std::uint32_t v = 0; v < Q * Q; ++v) {
      auto c = classify_square(DD, v);
      if (c.residual)
        ++residual;
      else
        ++split_sizes[{c.k, c.plus}];
    }
    CHECK(residual == std::uint64_t(q0) * q0 * q0);
    CHECK(split_sizes.size() == 2u * q0);
    for (auto& [key, sz] : split_sizes) CHECK(sz == std::uint64_t(q0) * q0 * (q0 - 1) / 2);
  }
}

TEST_CASE("half-split sets are independent and shears classify them") {
  for (fe q0 : {3, 5}) {
    Field B(q0, 1);
    QuadSplit D(B);
    const Tower& T = D.T;
    AffineCodec<Tower> ac(T);
    Graph g = build_gq(T);

    // I^+ / I^-: first coordinate in the base, second coordinate z + y theta
    // with y in the positive (negative) half
    std::vector<std::uint32_t> iplus, iminus;
    for (fe x = 0; x < q0; ++x)
      for (fe z = 0; z < q0; ++z)
        for (fe y = 1; y < q0; ++y) {
          std::uint32_t v = ac.id(x, T.from_digits({z, y}));
          (B.plus_half(y) ? iplus : iminus).push_back(v);
        }
    CHECK(is_independent(g, iplus));
    CHECK(is_independent(g, iminus));

    // shearing by k theta sends sign sigma to split class (k, sigma)
    for (fe k = 0; k < q0; ++k) {
      fe kt = T.mul(k, T.theta());
      for (auto v : iplus) {
        auto c = classify_square(D, shear_auto(T, kt, v));
        CHECK(!c.residual);
        CHECK(c.k == k);
        CHECK(c.plus);
      }
      for (auto v : iminus) {
        auto c = classify_square(D, shear_auto(T, kt, v));
        CHECK(!c.residual);
        CHECK(c.k == k);
        CHECK(!c.plus);
      }
    }

    // every split class is independent in the graph
    std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
    for (std::uint32_t v = 0; v < g.n(); ++v) {
      auto c = classify_square(D, v);
      if (!c.residual) classes[2 * c.k + c.plus].push_back(v);
    }
    for (auto& [cc, vs] : classes) CHECK(is_independent(g, vs));
  }
}

TEST_CASE("residual unique neighbor") {
  Field F3(3, 1);
  QuadSplit D(F3);
  AffineCodec<Tower> ac(D.T);

  std::uint32_t v = ac.id(3, 0);  // (theta, 0), class 1
  CHECK(residual_neighbor_in_class(D, v, 2) == ac.id(6, 0));  // (2 theta, 0)
  CHECK_THROWS_AS(residual_neighbor_in_class(D, v, 1), SameClass);
  CHECK_THROWS_AS(residual_neighbor_in_class(D, ac.id(0, 3), 1), Error);

  // exhaustive law at q0 in {3, 5}: exactly one neighbor in each other class,
  // it matches the closed form, and the map is an involution
  for (fe q0 : {3, 5}) {
    Field B(q0, 1);
    QuadSplit DD(B);
    const Tower& T = DD.T;
    AffineCodec<Tower> acc(T);
    auto xs = residual_vertices(DD);
    for (auto u : xs) {
      fe su = classify_square(DD, u).k;
      for (fe tgt = 0; tgt < q0; ++tgt) {
        if (tgt == su) continue;
        std::uint32_t w = residual_neighbor_in_class(DD, u, tgt);
        CHECK(classify_square(DD, w).residual);
        CHECK(classify_square(DD, w).k == tgt);
        CHECK(gq_adjacent(T, acc.decode(u), acc.decode(w)));
        std::uint32_t found = 0;
        for (auto x : xs)
          if (classify_square(DD, x).k == tgt &&
              gq_adjacent(T, acc.decode(u), acc.decode(x)) && x != u)
            ++found;
        CHECK(found == 1);
        CHECK(residual_neighbor_in_class(DD, w, su) == u);
      }
    }
  }
}

TEST_CASE("within-class adjacency closed form") {
  // same-class residual pairs are adjacent iff 4 s^2 mu0 + (s2+u2)^2 = t2+v2
  for (fe q0 : {3, 5}) {
    Field B(q0, 1);
    QuadSplit D(B);
    const Tower& T = D.T;
    AffineCodec<Tower> ac(T);
    auto xs = residual_vertices(D);
    for (auto u : xs)
      for (auto w : xs) {
        if (u == w) continue;
        auto cu = classify_square(D, u), cw = classify_square(D, w);
        if (cu.k != cw.k) continue;
        fe s = cu.k;
        fe s2 = T.digit(fe(u / D.Q()), 0), t2 = T.digit(fe(u % D.Q()), 0);
        fe u2 = T.digit(fe(w / D.Q()), 0), v2 = T.digit(fe(w % D.Q()), 0);
        fe sum = B.add(s2, u2);
        fe lhs = B.add(B.mul(B.mul(B.scalar(4), B.mul(s, s)), D.mu0), B.mul(sum, sum));
        bool pred = lhs == B.add(t2, v2);
        CHECK(gq_adjacent(T, ac.decode(u), ac.decode(w)) == pred);
      }
  }
}

TEST_CASE("square-case coloring") {
  Field F3(3, 1);
  auto rep = color_square(F3);
  CHECK(rep.q0 == 3);
  CHECK(rep.q == 9);
  CHECK(rep.bound == 13);
  CHECK(rep.palette <= 13);
  CHECK(rep.er_violations == 0);
  CHECK(rep.split_size == 54);
  CHECK(rep.residual_size == 27);
  CHECK(rep.claim1_max <= 3);
  CHECK(rep.claim2_max <= 5);
  CHECK(rep.residual_colors <= 6);

  Field F5(5, 1);
  auto rep5 = color_square(F5);
  CHECK(rep5.palette <= 21);
  CHECK(rep5.er_violations == 0);
  CHECK(rep5.claim1_max <= 5);
  CHECK(rep5.claim2_max <= 9);
  CHECK(rep5.split_size == 500);
  CHECK(rep5.residual_size == 125);
}
