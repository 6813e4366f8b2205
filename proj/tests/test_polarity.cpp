#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "er/polarity.hpp"
#include "er/tower.hpp"

using namespace er;

namespace {
struct Census {
  fe p;
  unsigned n;
  std::uint32_t verts;
  std::uint64_t edges;
  std::uint32_t absolutes;
};
}  // namespace

TEST_CASE("point codec round trip") {
  Field F(3, 1);
  PointCodec<Field> pc(F);
  CHECK(pc.n() == 13);
  for (std::uint32_t id = 0; id < pc.n(); ++id) {
    auto t = pc.triple(id);
    CHECK(pc.id(t[0], t[1], t[2]) == id);
  }
  // scaling does not change the point
  CHECK(pc.id(2, 1, 2) == pc.id(1, 2, 1));  // scale by 2 = inv(2) mod 3
  CHECK(pc.id(0, 2, 1) == pc.id(0, 1, 2));
  CHECK_THROWS_AS(pc.id(0, 0, 0), Error);
}

TEST_CASE("polarity graph census") {
  // n = q^2+q+1, m = q(q+1)^2/2, q+1 absolute points, degrees q and q+1
  Census table[] = {
      {3, 1, 13, 24, 4},   {5, 1, 31, 90, 6},    {7, 1, 57, 224, 8},
      {3, 2, 91, 450, 10}, {11, 1, 133, 792, 12}, {13, 1, 183, 1274, 14},
  };
  for (const auto& c : table) {
    Field F(c.p, c.n);
    std::uint64_t q = F.q();
    Graph g = build_er(F);
    auto s = graph_stats(g);
    CHECK(s.n == c.verts);
    CHECK(s.n == q * q + q + 1);
    CHECK(s.m == c.edges);
    CHECK(s.m == q * (q + 1) * (q + 1) / 2);
    CHECK(s.loop_count == c.absolutes);
    CHECK(s.loop_count == q + 1);
    CHECK(s.max_degree == q + 1);
    // absolute points have degree q, the rest q+1
    for (std::uint32_t v = 0; v < g.n(); ++v)
      CHECK(g.degree(v) == (g.has_loop(v) ? q : q + 1));
    CHECK(!c4_exists(g));
  }
}

TEST_CASE("fast builder equals pairwise reference") {
  for (fe q : {3, 5, 7, 9}) {
    Field F(q == 9 ? 3 : q, q == 9 ? 2u : 1u);
    Graph fast = build_er(F);
    Graph ref = build_er_reference(F);
    CHECK(fast.loops() == ref.loops());
    bool same = true;
    for (std::uint32_t u = 0; u < fast.n() && same; ++u)
      for (std::uint32_t v = 0; v < fast.n(); ++v)
        if (fast.test(u, v) != ref.test(u, v)) {
          same = false;
          break;
        }
    CHECK(same);
    // symmetry of the parallel fill
    bool sym = true;
    for (std::uint32_t u = 0; u < fast.n() && sym; ++u)
      for (std::uint32_t v = u + 1; v < fast.n(); ++v)
        if (fast.test(u, v) != fast.test(v, u)) sym = false;
    CHECK(sym);
  }
}

TEST_CASE("polarity graph over a tower") {
  Field F7(7, 1);
  Tower T(Tower::binomial(F7, 3, 2));
  PointCodec<Tower> pc(T);
  CHECK(pc.n() == 117993);
  // spot-check adjacency symmetry of the relation on a few triples
  std::array<fe, 3> a{1, 5, 11}, b{0, 1, 340}, c{1, 0, 0};
  CHECK(er_adjacent(T, a, b) == er_adjacent(T, b, a));
  CHECK(er_adjacent(T, a, c) == er_adjacent(T, c, a));
}

TEST_CASE("affine graph census") {
  Field F3(3, 1);
  Graph g = build_gq(F3);
  auto s = graph_stats(g);
  CHECK(s.n == 9);
  CHECK(s.m == 12);  // q(q^2-1)/2
  CHECK(s.loop_count == 3);
  // the loop set is exactly (x, 2x^2)
  AffineCodec<Field> ac(F3);
  for (fe x = 0; x < 3; ++x)
    CHECK(g.has_loop(ac.id(x, F3.mul(2, F3.mul(x, x)))));
  // relation instance: (0,0) ~ (1,1) since (0+1)^2 = 0+1
  CHECK(g.test(ac.id(0, 0), ac.id(1, 1)));

  for (fe q : {5, 7, 9}) {
    Field F(q == 9 ? 3 : q, q == 9 ? 2u : 1u);
    Graph gg = build_gq(F);
    auto ss = graph_stats(gg);
    CHECK(ss.m == F.q() * (F.q() * F.q() - 1) / 2);
    CHECK(ss.loop_count == F.q());
    Graph rr = build_gq_reference(F);
    CHECK(rr.edge_count() == ss.m);
    bool same = rr.loops() == gg.loops();
    for (std::uint32_t u = 0; u < gg.n() && same; ++u)
      for (std::uint32_t v = 0; v < gg.n(); ++v)
        if (gg.test(u, v) != rr.test(u, v)) same = false;
    CHECK(same);
  }
}

TEST_CASE("extended graph counts") {
  Field F3(3, 1);
  Graph h = build_hq(F3);
  auto s = graph_stats(h);
  CHECK(s.n == 13);
  CHECK(s.m == 24);  // affine edges + q^2 class edges + q apex edges
  HLayout<Field> hl(F3);
  CHECK(h.degree(hl.y_id()) == 3);
  for (std::uint32_t i = 1; i <= 3; ++i) CHECK(h.degree(hl.z_id(i)) == 4);
  CHECK(hl.b(1) == 1);
  CHECK(hl.b(2) == 2);
  CHECK(hl.b(3) == 0);
  CHECK_THROWS_AS(hl.b(0), NotHVertex);
  CHECK_THROWS_AS(hl.z_id(4), NotHVertex);
  // each class vertex is adjacent to exactly the affine vertices sharing
  // first coordinate b_i
  AffineCodec<Field> ac(F3);
  for (std::uint32_t i = 1; i <= 3; ++i)
    for (fe x1 = 0; x1 < 3; ++x1)
      for (fe x2 = 0; x2 < 3; ++x2)
        CHECK(h.test(hl.z_id(i), ac.id(x1, x2)) == (x1 == hl.b(i)));
}

TEST_CASE("vertex map into the polarity graph") {
  Field F3(3, 1);
  // affine (0,1) -> (1,0,2): inv(2) = 2 mod 3, so (1-0)/2... (b-a^2)/2 with a=0,b=1 -> 2
  AffineCodec<Field> ac(F3);
  PointCodec<Field> pc(F3);
  CHECK(phi_h_to_er(F3, ac.id(0, 1)) == pc.id(1, 0, 2));
  CHECK(phi_h_to_er(F3, ac.id(1, 1)) == pc.id(1, 1, 0));
  HLayout<Field> hl(F3);
  CHECK(phi_h_to_er(F3, hl.y_id()) == pc.id(0, 0, 1));
  CHECK(phi_h_to_er(F3, hl.z_id(1)) == pc.id(0, 1, 1));
  CHECK_THROWS_AS(phi_h_to_er(F3, 14), NotHVertex);
}

TEST_CASE("embedding verification") {
  for (fe q : {3, 5, 9}) {
    Field F(q == 9 ? 3 : q, q == 9 ? 2u : 1u);
    auto rep = verify_embedding(F);
    CHECK(rep.iso_ok);
    CHECK(rep.loops_ok);
    CHECK(rep.induced_ok);
    CHECK(rep.case1_ok);
    CHECK(rep.ok());
  }
}

TEST_CASE("perturbed map fails") {
  Field F3(3, 1);
  Graph H = build_hq(F3);
  Graph ER = build_er(F3);
  std::vector<std::uint32_t> f(H.n());
  for (std::uint32_t v = 0; v < H.n(); ++v) f[v] = phi_h_to_er(F3, v);
  CHECK(verify_vertex_map(H, ER, f, MapMode::Isomorphism));
  std::swap(f[0], f[1]);
  CHECK(!verify_vertex_map(H, ER, f, MapMode::Isomorphism));
}

TEST_CASE("vertex names") {
  Field F3(3, 1);
  CHECK(h_vertex_name(F3, 1) == "a:0,1");
  CHECK(h_vertex_name(F3, 9) == "z:1");
  CHECK(h_vertex_name(F3, 12) == "y");
  CHECK(er_vertex_name(F3, 0) == "p:1,0,0");
  CHECK(er_vertex_name(F3, 12) == "p:0,0,1");
}
