#include <random>
#include <vector>

#include "doctest.h"
#include "gausslink/arrowgen.hpp"
#include "gausslink/codec.hpp"
#include "gausslink/pairing.hpp"

using namespace gausslink;

namespace {

// Random diagram: arrows thrown uniformly onto `comps` circles, random signs.
gauss_diagram random_diagram(std::mt19937_64& rng, int comps, int arrows) {
  std::vector<std::vector<endpoint>> seqs(static_cast<size_t>(comps));
  std::uniform_int_distribution<int> pick(0, comps - 1);
  for (int a = 0; a < arrows; ++a) {
    seqs[static_cast<size_t>(pick(rng))].push_back({a, role::tail});
    seqs[static_cast<size_t>(pick(rng))].push_back({a, role::head});
  }
  for (auto& s : seqs) std::shuffle(s.begin(), s.end(), rng);
  std::vector<int> signs;
  for (int a = 0; a < arrows; ++a) signs.push_back(rng() % 2 ? 1 : -1);
  return gauss_diagram::from_sequences(std::move(seqs), std::move(signs));
}

// Random pattern on the same carrier shape.
arrow_pattern random_pattern(std::mt19937_64& rng, bool loop, int strings, int arrows) {
  std::vector<std::vector<endpoint>> seqs(static_cast<size_t>(strings));
  std::uniform_int_distribution<int> pick(0, strings - 1);
  for (int a = 0; a < arrows; ++a) {
    seqs[static_cast<size_t>(pick(rng))].push_back({a, role::tail});
    seqs[static_cast<size_t>(pick(rng))].push_back({a, role::head});
  }
  for (auto& s : seqs) std::shuffle(s.begin(), s.end(), rng);
  return arrow_pattern::from_sequences(loop, std::move(seqs));
}

const arrow_pattern kOrder2 = pattern_from_key("loop;t1 h2 h1 t2");

}  // namespace

TEST_CASE("empty pattern has exactly one embedding") {
  arrow_pattern empty;  // loop, no arrows
  CHECK(pair_count(empty, gauss_diagram{}) == 1);
  CHECK(pair_count(empty, parse_gauss_code("O1- U1-")) == 1);
}

TEST_CASE("single-arrow pairings count signs and directions") {
  arrow_pattern right = pattern_from_key("loop;t1 h1");
  arrow_pattern left = pattern_from_key("loop;h1 t1");
  CHECK(pair_count(right, parse_gauss_code("O1+ U1+")) == 1);
  CHECK(pair_count(right, parse_gauss_code("O1- U1-")) == -1);
  // the based order separates the two orientations
  CHECK(pair_count(left, parse_gauss_code("O1+ U1+")) == 0);
  CHECK(pair_count(left, parse_gauss_code("U1+ O1+")) == 1);
}

TEST_CASE("order-2 pattern on torus knots") {
  CHECK(pair_count(kOrder2, parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")) == 1);
  CHECK(pair_count(kOrder2, pretzel_diagram({2, 3})) == 3);
  // more pattern arrows than diagram arrows: no embeddings
  CHECK(pair_count(kOrder2, parse_gauss_code("O1+ U1+")) == 0);
}

TEST_CASE("carrier shape must match the diagram") {
  CHECK_THROWS_AS(pair_count(kOrder2, parse_gauss_code("O1+ U2+ / U1+ O2+")), error);
  arrow_pattern two = pattern_from_key("str2;h1;t1");
  CHECK_THROWS_AS(pair_count(two, parse_gauss_code("O1+ U1+")), error);
}

TEST_CASE("two-string tree pattern reads off inter-component arrows") {
  arrow_pattern two = pattern_from_key("str2;h1;t1");
  // positive Hopf: one arrow each way
  CHECK(pair_count(two, parse_gauss_code("O1+ U2+ / U1+ O2+")) == 1);
  // reversed orientation data: the matching arrow is negative
  CHECK(pair_count(two, parse_gauss_code("O1- U2- / U1- O2-")) == -1);
  // arrows from component 0 to 1 only: nothing points 1 -> 0
  gauss_diagram oneway = gauss_diagram::from_sequences(
      {{{0, role::tail}, {1, role::tail}}, {{0, role::head}, {1, role::head}}}, {1, 1});
  CHECK(pair_count(two, oneway) == 0);
}

TEST_CASE("pair_poly is linear in the polynomial") {
  gauss_diagram g = pretzel_diagram({2, 3});
  arrow_polynomial p;
  p.add(kOrder2, 3);
  p.add(pattern_from_key("loop;t1 h1"), -2);
  long long direct = 3 * pair_count(kOrder2, g) - 2 * pair_count(pattern_from_key("loop;t1 h1"), g);
  CHECK(pair_poly(p, g) == direct);
}

TEST_CASE("backtracking matcher agrees with the brute-force oracle") {
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 60; ++trial) {
    int comps = 1 + static_cast<int>(rng() % 3);
    int arrows = 2 + static_cast<int>(rng() % 5);
    gauss_diagram g = random_diagram(rng, comps, arrows);
    bool loop = comps == 1 && (rng() % 2 == 0);
    int parrows = 1 + static_cast<int>(rng() % 3);
    arrow_pattern a = random_pattern(rng, loop, loop ? 1 : comps, parrows);
    CHECK(pair_count(a, g) == pair_oracle(a, g));
  }
}

TEST_CASE("permuting pattern strings matches inversely permuted diagrams") {
  std::mt19937_64 rng(42);
  arrow_polynomial z3 = build_Z(3);
  for (int trial = 0; trial < 20; ++trial) {
    gauss_diagram g = random_diagram(rng, 3, 4 + static_cast<int>(rng() % 3));
    std::vector<int> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> inv(3);
    for (int i = 0; i < 3; ++i) inv[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    CHECK(pair_poly(permute_polynomial(z3, perm), g) ==
          pair_poly(z3, g.permute_components(inv)));
  }
}
