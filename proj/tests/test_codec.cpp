#include <vector>

#include "doctest.h"
#include "gausslink/codec.hpp"
#include "gausslink/invariants.hpp"

using namespace gausslink;

TEST_CASE("gauss code parse / emit round trip") {
  const char* codes[] = {
      "O1+ U1+",
      "O1+ U2+ O3+ U1+ O2+ U3+",
      "O1+ U2+ O3+ U1+ O2+ U4+ O5+ U3+ O4+ U5+",
      "O1+ U2- O4- U5+ / U1+ O3+ U4- O6- / O2- U3+ O5+ U6-",
      "/",  // two empty components
  };
  for (const char* code : codes) {
    gauss_diagram g = parse_gauss_code(code);
    CHECK(parse_gauss_code(emit_gauss_code(g)) == g);
  }
}

TEST_CASE("parser renumbers labels by first appearance") {
  // same diagram under a label permutation
  gauss_diagram a = parse_gauss_code("O7+ U9- O9- U7+");
  gauss_diagram b = parse_gauss_code("O1+ U2- O2- U1+");
  CHECK(a == b);
}

TEST_CASE("parser accepts multi-digit labels and arbitrary spacing") {
  gauss_diagram g = parse_gauss_code("  O12+\tU12+ \n");
  CHECK(g.arrow_count() == 1);
  CHECK(g.components() == 1);
}

TEST_CASE("parser rejects malformed codes") {
  auto code_of = [](const char* text) {
    try {
      parse_gauss_code(text);
    } catch (const error& e) {
      return e.code();
    }
    return errc::syntax_error;  // placeholder; every case below must throw
  };
  CHECK(code_of("O1+ U1-") == errc::sign_mismatch);
  CHECK(code_of("O1+ O1+") == errc::role_error);
  CHECK(code_of("O1+") == errc::dangling_arrow);
  CHECK(code_of("O1+ U1+ O2+ U2") == errc::syntax_error);
  CHECK(code_of("X1+ U1+") == errc::syntax_error);
  CHECK(code_of("O0+ U0+") == errc::syntax_error);
}

TEST_CASE("emitted code uses 1-based labels with signs on both passages") {
  gauss_diagram g = parse_gauss_code("O1+ U2- O2- U1+");
  CHECK(emit_gauss_code(g) == "O1+ U2- O2- U1+");
}

TEST_CASE("pretzel component rule") {
  // knot iff all columns odd with oddly many columns, or exactly one even
  CHECK_NOTHROW(pretzel_diagram({1, 1, 1}));
  CHECK_NOTHROW(pretzel_diagram({3, 5, 7}));
  CHECK_NOTHROW(pretzel_diagram({2, 3, 5}));
  CHECK_NOTHROW(pretzel_diagram({3, 4, 5}));
  CHECK_THROWS_AS(pretzel_diagram({1, 1}), error);        // even column count, all odd
  CHECK_THROWS_AS(pretzel_diagram({2, 2, 3}), error);     // two even columns
  CHECK_THROWS_AS(pretzel_diagram({2, 4, 6}), error);     // three even columns
  CHECK_THROWS_AS(pretzel_diagram({}), error);
}

TEST_CASE("zero column turns a pretzel into a connected sum") {
  // P(0, 3, 3) is the granny knot: c2 adds, c4 follows the sum formula
  gauss_diagram granny = pretzel_diagram({0, 3, 3});
  CHECK(granny.arrow_count() == 6);
  CHECK(conway_c2n(granny, 1) == 2);
  CHECK(conway_c2n(granny, 2) == 1);
}

TEST_CASE("pretzel arrow count equals total twist count") {
  CHECK(pretzel_diagram({1, 1, 1}).arrow_count() == 3);
  CHECK(pretzel_diagram({3, 5, 7}).arrow_count() == 15);
  CHECK(pretzel_diagram({2, 3, 3}).arrow_count() == 8);
}

TEST_CASE("pretzel order-2 coefficient matches Manchon's closed form") {
  // c2(P(a,b,c)) = (ab + ac + bc + 1) / 4 for odd a, b, c of equal sign
  auto c2 = [](int a, int b, int c) {
    return conway_c2n(pretzel_diagram({a, b, c}), 1);
  };
  CHECK(c2(1, 1, 1) == 1);
  CHECK(c2(1, 1, 3) == 2);
  CHECK(c2(3, 3, 3) == 7);
  CHECK(c2(-1, -1, -1) == 1);
  CHECK(c2(-3, -1, -5) == 6);
}

TEST_CASE("two-column pretzels are (2, q) torus diagrams") {
  // series-connected columns add; c2 of T(2, q) is (q*q - 1) / 8
  CHECK(conway_c2n(pretzel_diagram({1, 2}), 1) == 1);
  CHECK(conway_c2n(pretzel_diagram({2, 3}), 1) == 3);
  CHECK(conway_c2n(pretzel_diagram({3, 4}), 1) == 6);
}

TEST_CASE("double twist knots realize the fraction m + 1/k") {
  struct row {
    int m, k;
    long long c2;
  };
  // values cross-checked against the two-bridge classification:
  // D(1,2) = trefoil, D(2,2) = figure eight, D(3,-2) = figure eight,
  // D(1,4) = (2,5) torus knot, D(5,-4) = 19/4 two-bridge, D(1,-2) = unknot
  const row rows[] = {{1, 2, 1},  {2, 2, -1}, {3, -2, -1}, {5, -4, -3},
                      {1, 4, 3},  {1, -2, 0}, {2, -2, 1},  {4, 2, -2}};
  for (const row& r : rows) {
    gauss_diagram g = double_twist_diagram(r.m, r.k);
    CHECK(g.components() == 1);
    CHECK(g.arrow_count() == std::abs(r.m) + std::abs(r.k));
    CHECK(conway_c2n(g, 1) == r.c2);
  }
}

TEST_CASE("double twist closure is a knot exactly when mk is even") {
  CHECK_THROWS_AS(double_twist_diagram(1, 1), error);
  CHECK_THROWS_AS(double_twist_diagram(3, 3), error);
  CHECK_THROWS_AS(double_twist_diagram(3, -5), error);
  CHECK_THROWS_AS(double_twist_diagram(0, 0), error);
  CHECK_NOTHROW(double_twist_diagram(0, 2));  // pure twist region, unknot
  CHECK(conway_c2n(double_twist_diagram(0, 2), 1) == 0);
}
