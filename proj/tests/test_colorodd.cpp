#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "er/colorodd.hpp"

using namespace er;

TEST_CASE("residue tables") {
  ResidueTables t1(1);
  CHECK(t1.t == 3);
  CHECK(t1.sq == std::vector<unsigned>{0, 2, 1});
  CHECK(t1.sq_wrap == std::vector<char>{0, 1, 0});
  for (unsigned k = 0; k < 3; ++k) CHECK(t1.pairs[k].size() == 1);
  CHECK(t1.pairs[0][0].i == 1);
  CHECK(t1.pairs[0][0].j == 2);
  CHECK(t1.pairs[0][0].wrap);
  CHECK_FALSE(t1.pairs[1][0].wrap);  // {0,1}
  CHECK_FALSE(t1.pairs[2][0].wrap);  // {0,2}

  ResidueTables t2(2);
  CHECK(t2.t == 5);
  CHECK(t2.sq == std::vector<unsigned>{0, 3, 1, 4, 2});
  CHECK(t2.sq_wrap == std::vector<char>{0, 1, 0, 1, 0});
  std::size_t total = 0;
  for (unsigned k = 0; k < 5; ++k) {
    CHECK(t2.pairs[k].size() == 2);
    total += t2.pairs[k].size();
  }
  CHECK(total == 10);  // every unordered digit pair appears exactly once

  CHECK_THROWS_AS(ResidueTables(0), Error);
}

TEST_CASE("alpha and residual system forms") {
  Field B(7, 1);
  CHECK(residual_alpha(B, 1, {1, 1, 1}) == 6);           // 2 + 4
  CHECK(residual_alpha(B, 2, {1, 0, 1, 0, 1}) == 6);     // 2 + 4(1 + 0)
  CHECK(residual_alpha(B, 1, {0, 0, 0}) == 0);
  CHECK_THROWS_AS(residual_alpha(B, 1, {1, 2}), BadLength);
  CHECK_THROWS_AS(residual_system(B, 1, 0, {1, 2, 3}), ZeroElement);
  CHECK_THROWS_AS(residual_system(B, 1, 2, {1, 2}), BadLength);

  // r = 1: the three equations are z0^2 + 2 mu z1 z2, mu z2^2 + 2 z0 z1,
  // z1^2 + 2 z0 z2 — compare against the table-driven evaluation everywhere
  for (fe mu : {fe(1), fe(2), fe(5)})
    for (fe z0 = 0; z0 < 7; ++z0)
      for (fe z1 = 0; z1 < 7; ++z1)
        for (fe z2 = 0; z2 < 7; ++z2) {
          auto out = residual_system(B, 1, mu, {z0, z1, z2});
          fe e0 = B.add(B.mul(z0, z0), B.mul(B.scalar(2), B.mul(mu, B.mul(z1, z2))));
          fe e1 = B.add(B.mul(mu, B.mul(z2, z2)), B.mul(B.scalar(2), B.mul(z0, z1)));
          fe e2 = B.add(B.mul(z1, z1), B.mul(B.scalar(2), B.mul(z0, z2)));
          REQUIRE(out == std::vector<fe>{e0, e1, e2});
        }
}

TEST_CASE("system solution counts and bound") {
  CHECK(system_bound(3, 1) == 30);
  CHECK(system_bound(5, 1) == 99);
  CHECK(system_bound(7, 1) == 218);
  CHECK(system_bound(11, 2) == 19749);

  // char 3 divides t = 3, so the quotient ring has a nilpotent line: 3
  // solutions for every mu; elsewhere x^3 - mu is squarefree and only the
  // zero vector squares to zero
  Field B3(3, 1), B5(5, 1), B7(7, 1);
  for (fe mu = 1; mu < 3; ++mu) CHECK(count_system_solutions(B3, 1, mu) == 3);
  for (fe mu = 1; mu < 5; ++mu) CHECK(count_system_solutions(B5, 1, mu) == 1);
  for (fe mu = 1; mu < 7; ++mu) CHECK(count_system_solutions(B7, 1, mu) == 1);
  // a hand-checked nilpotent: (x-1)^2 = (1,1,1) in GF(3)[x]/(x^3-1)
  auto out = residual_system(B3, 1, 1, {1, 1, 1});
  CHECK(out == std::vector<fe>{0, 0, 0});

  CHECK_THROWS_AS(count_system_solutions(Field(13, 1), 3, 1), TooLarge);
  CHECK_THROWS_AS(count_system_solutions(B3, 1, 0), ZeroElement);
}

TEST_CASE("odd split basics at (7,1)") {
  Field B(7, 1);
  OddSplit D(B, 1, 2);
  CHECK(D.Q() == 343);
  CHECK(D.t == 3);

  // expected second coordinate of theta: 2 theta^2 has digits (0,0,2)
  CHECK(expected_second(D, 7) == 98);
  // ... and it always equals 2 s^2 in the tower
  for (fe s = 0; s < 343; ++s)
    REQUIRE(expected_second(D, s) == D.T.mul(D.T.scalar(2), D.T.mul(s, s)));

  auto c1 = classify_pair(D, 7, 0);  // s = theta: alpha = 2, defect -2 -> minus
  CHECK_FALSE(c1.residual);
  CHECK(c1.rank == 1);
  CHECK_FALSE(c1.plus);
  auto c2 = classify_pair(D, 0, 49);  // t = theta^2: defect 1 -> plus
  CHECK_FALSE(c2.residual);
  CHECK(c2.rank == 0);
  CHECK(c2.plus);
  CHECK(classify_pair(D, 7, 98).residual);

  CHECK(residual_pair(D, 7, 98));
  CHECK(layer_of(D, 7, 98) == 0);   // the expected second coordinate: core
  CHECK(layer_of(D, 7, 99) == 1);   // digit 0 off: first scaling exits
  CHECK(layer_of(D, 7, 105) == 2);  // digit 1 off: second scaling exits
}

TEST_CASE("exhaustive structural verification at (7,1)") {
  Field B(7, 1);
  OddSplit D(B, 1, 2);
  auto rep = verify_odd_claims_exhaustive(D);
  CHECK(rep.cover_ok);
  CHECK(rep.classify_ok);
  CHECK(rep.independent_ok);
  CHECK(rep.automorphism_ok);
  CHECK(rep.digit_pin_ok);
  CHECK(rep.core_graph_ok);
  CHECK(rep.core_system_ok);
  CHECK(rep.degree_bound_ok);
  CHECK(rep.ok());
  CHECK(rep.split_size == 100842);
  CHECK(rep.x_size == 16807);
  CHECK(rep.core_size == 343);
  CHECK(rep.layer_sizes == std::vector<std::uint64_t>{100842, 14406, 2058});
  CHECK(rep.core_max_degree == 0);  // the core is an independent set here
  CHECK(rep.system_solutions == 1);
  CHECK(rep.solution_bound == 218);
  CHECK(rep.checked == 1287728);

  CHECK_THROWS_AS(verify_odd_claims_exhaustive(OddSplit(Field(13, 1), 1, 2)), TooLarge);
}

TEST_CASE("sampled structural verification at (11,2)") {
  Field B(11, 1);
  CHECK(find_binomial_mu(B, 5) == 2);
  OddSplit D(B, 2, 2);
  CHECK(D.Q() == 161051);
  auto rep = verify_odd_claims_sampled(D, 300, 42);
  CHECK(rep.cover_ok);
  CHECK(rep.classify_ok);
  CHECK(rep.independent_ok);
  CHECK(rep.automorphism_ok);
  CHECK(rep.digit_pin_ok);
  CHECK(rep.core_graph_ok);
  CHECK(rep.core_system_ok);
  CHECK(rep.degree_bound_ok);
  CHECK(rep.system_solutions == 1);
  CHECK(rep.solution_bound == 19749);
  CHECK(rep.checked == 1800);
}

TEST_CASE("odd coloring at (7,1)") {
  Field B(7, 1);
  auto rep = color_odd(B, 1);  // mu auto-selected
  CHECK(rep.mu == 2);
  CHECK(rep.q == 343);
  CHECK(rep.qbase == 7);
  CHECK(rep.palette == 296);
  CHECK(rep.bound == 513);
  CHECK(rep.bound_ok);
  CHECK(rep.layer_sizes == std::vector<std::uint64_t>{100842, 14406, 2058});
  CHECK(rep.core_size == 343);
  CHECK(rep.core_max_degree == 0);
  CHECK(rep.core_colors == 1);
  CHECK(rep.split_layer_colors == 294);
  CHECK(rep.system_solutions == 1);
  CHECK(rep.solution_bound == 218);
  CHECK(rep.h_violations == 0);
  CHECK_FALSE(rep.graph_verified);
  CHECK(rep.er_color.empty());

  // class vertices share one fresh color; the apex reuses the least free one
  HLayout<Tower> hl(Tower::binomial(B, 3, 2));
  CHECK(rep.h_color[hl.z_id(1)] == 295);
  CHECK(rep.h_color[hl.z_id(343)] == 295);
  CHECK(rep.h_color[hl.y_id()] == 0);

  // spot-check block structure: split colors < 98, layer-l block offset 98*l
  OddSplit D(B, 1, 2);
  auto c = classify_pair(D, 7, 0);
  CHECK(rep.h_color[7 * 343 + 0] == 2 * c.rank + 1);
  CHECK(rep.h_color[7 * 343 + 98] == 294);  // core block starts at 2*49*3
}

TEST_CASE("odd coloring certified on the polarity graph") {
  Field B(7, 1);
  auto rep = color_odd(B, 1, 2, true);
  CHECK(rep.graph_verified);
  CHECK(rep.h_violations == 0);
  CHECK(rep.er_violations == 0);
  CHECK(rep.er_color.size() == 117993);
  CHECK(rep.palette == 296);
}

TEST_CASE("odd coloring errors") {
  CHECK_THROWS_AS(color_odd(Field(3, 1), 1), NoBinomial);  // no binomial cube modulus
  CHECK_THROWS_AS(color_odd(Field(5, 1), 1), NoBinomial);
  CHECK_THROWS_AS(color_odd(Field(13, 1), 1), TooLarge);  // 2197 > 1024
}
