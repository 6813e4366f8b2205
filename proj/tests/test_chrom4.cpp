#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "er/chrom4.hpp"
#include "er/witness.hpp"

using namespace er;

TEST_CASE("quadratic character sums: closed form vs direct scan") {
  Field F7(7, 1), F5(5, 1);
  auto c1 = quad_char_sum_closed(F7, 1, 1, 0);  // x^2 + x
  CHECK(c1.sum == -1);
  CHECK_FALSE(c1.degenerate);
  auto c2 = quad_char_sum_closed(F7, 3, 0, 1);  // 3x^2 + 1
  CHECK(c2.sum == 1);
  CHECK_FALSE(c2.degenerate);
  auto c3 = quad_char_sum_closed(F5, 1, 0, 0);  // x^2: zero discriminant
  CHECK(c3.sum == 4);
  CHECK(c3.degenerate);
  CHECK(char_sum_direct(F7, {0, 1, 1}) == -1);
  CHECK(char_sum_direct(F7, {1, 0, 3}) == 1);
  CHECK(char_sum_direct(F5, {0, 0, 1}) == 4);
  CHECK_THROWS_AS(quad_char_sum_closed(F7, 0, 1, 1), ZeroElement);

  // exhaustive agreement over several fields, counting the degenerate locus
  for (auto [p, n] : {std::pair<fe, unsigned>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
    Field F(p, n);
    std::uint64_t degenerate = 0;
    for (fe a2 = 1; a2 < F.q(); ++a2)
      for (fe a1 = 0; a1 < F.q(); ++a1)
        for (fe a0 = 0; a0 < F.q(); ++a0) {
          auto cs = quad_char_sum_closed(F, a2, a1, a0);
          REQUIRE(cs.sum == char_sum_direct(F, {a0, a1, a2}));
          degenerate += cs.degenerate;
        }
    // disc = 0 fixes a0 given (a2, a1)
    CHECK(degenerate == (F.q() - 1) * F.q());
  }
}

TEST_CASE("character-sum bound checks") {
  Field F7(7, 1);
  auto wc = weil_check(F7, {0, 0, 0, 1});  // x^3
  CHECK(wc.sum == 0);
  CHECK(wc.bound_sq == 4 * 7);
  CHECK(wc.ok);
  auto wl = weil_check(F7, {0, 1});  // x: full-character sum vanishes
  CHECK(wl.sum == 0);
  CHECK(wl.bound_sq == 0);
  CHECK(wl.ok);
  CHECK_THROWS_AS(weil_check(F7, {5}), Error);                // constant
  CHECK_THROWS_AS(weil_check(F7, {3, 6, 3}), IsSquare);       // 3(x+1)^2
  CHECK_THROWS_AS(weil_check(F7, {0, 0, 1}), IsSquare);       // x^2
  CHECK_THROWS_AS(weil_check(F7, {0, 0, 0, 0, 2}), IsSquare); // 2(x^2)^2

  // every cubic passes; every quartic passes or is a scaled square
  for (auto [p, n] : {std::pair<fe, unsigned>{7, 1}, {3, 2}}) {
    Field F(p, n);
    for (fe a0 = 0; a0 < F.q(); ++a0)
      for (fe a1 = 0; a1 < F.q(); ++a1)
        for (fe a2 = 0; a2 < F.q(); ++a2)
          for (fe a3 = 1; a3 < F.q(); ++a3) REQUIRE(weil_check(F, {a0, a1, a2, a3}).ok);
    std::uint64_t sq = 0;
    for (fe a0 = 0; a0 < F.q(); ++a0)
      for (fe a1 = 0; a1 < F.q(); ++a1)
        for (fe a2 = 0; a2 < F.q(); ++a2)
          for (fe a4 = 1; a4 < F.q(); ++a4) {
            try {
              auto r = weil_check(F, {a0, a1, a2, 0, a4});
              REQUIRE(r.ok);
            } catch (const IsSquare&) {
              ++sq;
            }
          }
    // scaled squares c (x^2 + e)^2 are the a3 = 0 quartics with h = x^2 + e
    CHECK(sq == (F.q() - 1) * F.q());
  }
}

TEST_CASE("seeded squarefree scans find no violations") {
  for (auto [p, n] : {std::pair<fe, unsigned>{7, 1}, {3, 2}, {5, 2}, {7, 2}}) {
    Field F(p, n);
    for (unsigned d : {3u, 4u}) {
      auto s = weil_random_scan(F, d, 2000, 7 + d);
      CHECK(s.tested == 2000);
      CHECK(s.drawn >= s.tested);
      CHECK(s.violations == 0);
      auto s2 = weil_random_scan(F, d, 2000, 7 + d);
      CHECK(s2.drawn == s.drawn);  // same seed, same path
    }
  }
  CHECK_THROWS_AS(weil_random_scan(Field(7, 1), 0, 10, 1), Error);
}

TEST_CASE("alpha tuples: pruned search equals enumeration") {
  // no admissible 5-tuple exists in small fields; both routes agree on that
  for (fe p : {fe(11), fe(13), fe(17), fe(19), fe(23)}) {
    Field F(p, 1);
    CHECK_THROWS_AS(find_alphas(F, 5), SearchExhausted);
    CHECK_THROWS_AS(find_alphas_bruteforce(F, 5), SearchExhausted);
  }
  // smaller tuples do exist; the two routes must return the same one
  for (fe p : {fe(11), fe(13), fe(17), fe(19), fe(23)}) {
    Field F(p, 1);
    for (unsigned k : {2u, 3u}) {
      auto a = find_alphas(F, k);
      auto b = find_alphas_bruteforce(F, k);
      CHECK(a == b);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j) CHECK(F.quad_char(F.add(a[i], a[j])) == 1);
    }
  }
  // the first prime with a 5-tuple in reach of the witness construction
  Field F(491, 1);
  auto a = find_alphas(F, 5);
  CHECK(a == std::vector<fe>{0, 1, 3, 11, 14});
}

TEST_CASE("triangle solver") {
  Field F(7, 1);
  auto t = triangle_solve(F, 1, 2, 3);
  CHECK(t.u == 1);
  CHECK(t.v == 0);
  CHECK(t.w == 2);
  // the defining equations, across a sample of targets
  for (fe A = 0; A < 7; ++A)
    for (fe B = 0; B < 7; ++B)
      for (fe C = 0; C < 7; ++C) {
        auto s = triangle_solve(F, A, B, C);
        REQUIRE(F.add(s.u, s.v) == A);
        REQUIRE(F.add(s.v, s.w) == B);
        REQUIRE(F.add(s.u, s.w) == C);
      }
}

TEST_CASE("witness construction at q = 491") {
  Field F(491, 1);
  Witness w = build_witness(F);
  CHECK(w.field == "491^1/0,1");
  CHECK(w.alphas == std::vector<fe>{0, 1, 3, 11, 14});
  CHECK(w.roots.size() == 10);
  CHECK(w.roots[0] == 1);  // sqrt(0 + 1)
  CHECK(w.roots[4] == 2);  // sqrt(1 + 3)
  CHECK(w.names.size() == 36);
  CHECK(w.edges.size() == 65);  // 5 apex + 30 class + 30 triangle edges
  CHECK(w.names[0] == "y");
  CHECK(w.names[1] == "z:491");  // class of first coordinate 0
  CHECK(w.names[2] == "z:1");

  auto text = witness_format(w);
  Witness w2 = witness_parse(text);
  CHECK(witness_format(w2) == text);

  auto rep = witness_verify(w2);
  CHECK(rep.alphas_ok);
  CHECK(rep.roots_ok);
  CHECK(rep.names_ok);
  CHECK(rep.edges_ok);
  CHECK(rep.transport_ok);
  CHECK(rep.refuted_first);
  CHECK(rep.refuted_second);
  CHECK(rep.ok());
  CHECK(rep.vertices == 36);
  CHECK(rep.nodes_first > 0);
  CHECK(rep.nodes_second > 0);
  // dropping the apex admits a 3-coloring: the certificate is sharp
  CHECK(rep.apexless_3colorable);

  CHECK_THROWS_AS(build_witness(Field(11, 1)), SearchExhausted);
}

TEST_CASE("witness tampering is caught") {
  Field F(491, 1);
  Witness w = build_witness(F);

  Witness bad = w;
  fe nonsq = 15;  // paired with alpha 0, a nonsquare breaks the character test
  while (F.quad_char(nonsq) != -1) ++nonsq;
  bad.alphas[4] = nonsq;
  CHECK_FALSE(witness_verify(bad).alphas_ok);

  bad = w;
  bad.alphas[4] = bad.alphas[3];  // not strictly ascending
  CHECK_FALSE(witness_verify(bad).alphas_ok);

  bad = w;
  bad.roots[3] = bad.roots[3] + 1;
  CHECK_FALSE(witness_verify(bad).roots_ok);

  bad = w;
  bad.edges.pop_back();
  auto rep = witness_verify(bad);
  CHECK_FALSE(rep.edges_ok);
  CHECK_FALSE(rep.ok());

  bad = w;
  bad.names[7] = bad.names[6];  // duplicate vertex
  CHECK_FALSE(witness_verify(bad).names_ok);

  bad = w;
  bad.names.push_back("q:3");  // unknown kind
  CHECK_FALSE(witness_verify(bad).names_ok);
}

TEST_CASE("witness parser rejects malformed input") {
  CHECK_THROWS_AS(witness_parse("nonsense"), Error);
  CHECK_THROWS_AS(witness_parse("witness_v1\nfield 7^1/0,1\n"), Error);
  CHECK_THROWS_AS(
      witness_parse("witness_v1\nfield 7^1/0,1\nalphas 1\nroots 1\nvertices 2\ny\nz:1\n"
                    "edges 1\n5 9\n"),
      Error);  // edge endpoint out of range
  CHECK_THROWS_AS(
      witness_parse("witness_v1\nfield 7^1/0,1\nalphas 1\nroots 1\nvertices 2\ny\nz:1\n"
                    "edges 2\n0 1\n"),
      Error);  // truncated edge list
}
