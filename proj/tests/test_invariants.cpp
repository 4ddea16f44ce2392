#include <vector>

#include "doctest.h"
#include "gausslink/codec.hpp"
#include "gausslink/invariants.hpp"

using namespace gausslink;

namespace {

const char* kBorromean = "O1+ U2- O4- U5+ / U1+ O3+ U4- O6- / O2- U3+ O5+ U6-";
const char* kHopf = "O1+ U2+ / U1+ O2+";
const char* kGranny = "O1+ U2+ O3+ U1+ O2+ U3+ O4+ U5+ O6+ U4+ O5+ U6+";
const char* kSquare = "O1+ U2+ O3+ U1+ O2+ U3+ O4- U5- O6- U4- O5- U6-";

}  // namespace

TEST_CASE("order-0 Conway coefficient is 1") {
  CHECK(conway_c2n(gauss_diagram{}, 0) == 1);
  CHECK(conway_c2n(parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+"), 0) == 1);
}

TEST_CASE("Conway coefficients of (2, q) torus knots") {
  // c2 = (q^2 - 1) / 8; c4 = (q^2 - 1)(q^2 - 9) / 384
  struct row {
    int q;
    long long c2, c4;
  };
  for (const row& r : {row{3, 1, 0}, row{5, 3, 1}, row{7, 6, 5}}) {
    gauss_diagram g = pretzel_diagram({2, r.q - 2});
    CHECK(conway_c2n(g, 1) == r.c2);
    CHECK(conway_c2n(g, 2) == r.c4);
    // even coefficients do not see the mirror
    gauss_diagram m = pretzel_diagram({-2, -(r.q - 2)});
    CHECK(conway_c2n(m, 1) == r.c2);
    CHECK(conway_c2n(m, 2) == r.c4);
  }
}

TEST_CASE("Conway coefficients add over connected sums at order 2") {
  // granny and square knots: c2 = 1 + 1, c4 = c4 + c2*c2 + c4 = 1
  for (const char* code : {kGranny, kSquare}) {
    gauss_diagram g = parse_gauss_code(code);
    CHECK(conway_c2n(g, 1) == 2);
    CHECK(conway_c2n(g, 2) == 1);
  }
}

TEST_CASE("Conway coefficients ignore the base point") {
  gauss_diagram g = pretzel_diagram({2, 3});
  for (int off = 0; off < 10; ++off) {
    CHECK(conway_c2n(g.rebase(0, off), 1) == 3);
    CHECK(conway_c2n(g.rebase(0, off), 2) == 1);
  }
}

TEST_CASE("Conway evaluation requires a knot diagram") {
  CHECK_THROWS_AS(conway_c2n(parse_gauss_code(kHopf), 1), error);
  CHECK_THROWS_AS(conway_c2n(pretzel_diagram({2, 3}), 5), error);  // past cap_chords
}

TEST_CASE("linking numbers from arrow signs") {
  gauss_diagram h = parse_gauss_code(kHopf);
  CHECK(linking_number(h, 0, 1) == 1);
  CHECK(linking_number(h, 1, 0) == 1);
  gauss_diagram hm = h.negate_signs();
  CHECK(linking_number(hm, 0, 1) == -1);
  gauss_diagram b = parse_gauss_code(kBorromean);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(linking_number(b, i, j) == 0);
}

TEST_CASE("length-2 Milnor number is the linking number") {
  milnor_result r = milnor_mu(parse_gauss_code(kHopf), {1}, 0);
  CHECK(r.raw == 1);
  CHECK(r.modulus == 0);
  CHECK(r.reduced == 1);
}

TEST_CASE("Borromean triple invariant") {
  gauss_diagram b = parse_gauss_code(kBorromean);
  milnor_result r = milnor_mu(b, {1, 2}, 0);
  CHECK(r.raw == 1);
  CHECK(r.modulus == 0);
  CHECK(r.reduced == 1);
  // antisymmetry in the leading pair changes only the sign of the raw value
  CHECK(milnor_mu(b, {2, 1}, 0).raw == -1);
  CHECK(milnor_mu(b, {2, 1}, 0).reduced == 1);
}

TEST_CASE("triple invariant is cyclic in the index sequence") {
  gauss_diagram b = parse_gauss_code(kBorromean);
  CHECK(milnor_mu(b, {1, 2}, 0).reduced == 1);
  CHECK(milnor_mu(b, {2, 0}, 1).reduced == 1);
  CHECK(milnor_mu(b, {0, 1}, 2).reduced == 1);
}

TEST_CASE("reduced Milnor value ignores base points") {
  gauss_diagram b = parse_gauss_code(kBorromean);
  for (int comp = 0; comp < 3; ++comp) {
    for (int off = 1; off <= 4; ++off) {
      gauss_diagram r = b.rebase(comp, off);
      CHECK(milnor_mu(r, {1, 2}, 0).reduced == 1);
      CHECK(milnor_mu(r, {1, 2}, 0).modulus == 0);
    }
  }
}

TEST_CASE("nonzero pairwise linking sets the indeterminacy") {
  // chain of three circles: lk(0,1) = lk(1,2) = 1, lk(0,2) = 0
  gauss_diagram chain = parse_gauss_code("O1+ U2+ / U1+ O2+ O3+ U4+ / U3+ O4+");
  CHECK(linking_number(chain, 0, 1) == 1);
  CHECK(linking_number(chain, 0, 2) == 0);
  CHECK(milnor_delta(chain, {0, 1, 2}) == 1);
  milnor_result r = milnor_mu(chain, {0, 1}, 2);
  CHECK(r.modulus == 1);
  CHECK(r.reduced == 0);  // everything vanishes mod 1
  // length-2 sequences carry no lower-order correction
  CHECK(milnor_delta(chain, {0, 1}) == 0);
}

TEST_CASE("milnor_mu validates its index sequence") {
  gauss_diagram b = parse_gauss_code(kBorromean);
  CHECK_THROWS_AS(milnor_mu(b, {1, 1}, 0), error);   // repeated lead index
  CHECK_THROWS_AS(milnor_mu(b, {1, 2}, 2), error);   // last repeats a lead
  CHECK_THROWS_AS(milnor_mu(b, {1, 3}, 0), error);   // out of range
  CHECK_THROWS_AS(milnor_mu(b, {}, 0), error);       // sequence too short
  // indices may name a sublink: this is lk of components 1 and 0
  CHECK(milnor_mu(b, {1}, 0).raw == 0);
}

TEST_CASE("bracket_reduce walks to the nearest multiple") {
  CHECK(bracket_reduce(5, 0) == 5);
  CHECK(bracket_reduce(-5, 0) == 5);
  CHECK(bracket_reduce(7, 5) == 2);
  CHECK(bracket_reduce(8, 5) == 2);
  CHECK(bracket_reduce(10, 5) == 0);
  CHECK(bracket_reduce(-7, 5) == 2);
  CHECK(bracket_reduce(0, 0) == 0);
  CHECK(bracket_reduce(3, 1) == 0);
}

TEST_CASE("generator caches hand back the same object") {
  CHECK(&cached_conway_poly(1) == &cached_conway_poly(1));
  CHECK(&cached_milnor_poly(3) == &cached_milnor_poly(3));
  CHECK(cached_conway_poly(1).size() == 1);
  CHECK(cached_milnor_poly(3).size() == 3);
}
