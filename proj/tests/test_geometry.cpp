#include <cmath>

#include "doctest.h"
#include "gausslink/geometry.hpp"
#include "gausslink/invariants.hpp"

using namespace gausslink;

namespace {

poly_link scaled(const poly_link& link, double s) {
  poly_link out = link;
  for (auto& comp : out.components)
    for (auto& v : comp) v = s * v;
  return out;
}

}  // namespace

TEST_CASE("vector helpers") {
  vec3 x{1, 0, 0}, y{0, 1, 0};
  vec3 z = cross(x, y);
  CHECK(z.z == doctest::Approx(1.0));
  CHECK(dot(x, y) == 0.0);
  CHECK(norm(vec3{3, 4, 0}) == doctest::Approx(5.0));
  vec3 n = normalized(vec3{0, 0, 7});
  CHECK(n.z == doctest::Approx(1.0));
}

TEST_CASE("validate rejects degenerate links") {
  CHECK_THROWS_AS(validate(poly_link{}), error);
  poly_link two_pts{"", {{{0, 0, 0}, {1, 0, 0}}}};
  CHECK_THROWS_AS(validate(two_pts), error);
  poly_link repeat{"", {{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}}};
  CHECK_THROWS_AS(validate(repeat), error);
  poly_link bad{"", {{{0, 0, 0}, {1, 0, 0}, {0, std::nan(""), 0}}}};
  CHECK_THROWS_AS(validate(bad), error);
  CHECK_NOTHROW(validate(builtin_link("circle")));
}

TEST_CASE("poly_link JSON round trip") {
  poly_link hopf = builtin_link("hopf", {"n=24"});
  poly_link back = parse_poly_link(dump_poly_link(hopf));
  CHECK(back.name == hopf.name);
  REQUIRE(back.components.size() == hopf.components.size());
  for (size_t c = 0; c < back.components.size(); ++c) {
    REQUIRE(back.components[c].size() == hopf.components[c].size());
    for (size_t i = 0; i < back.components[c].size(); ++i)
      CHECK(norm(back.components[c][i] - hopf.components[c][i]) == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(parse_poly_link("not json"), error);
  CHECK_THROWS_AS(parse_poly_link("{\"components\": [[[0,0]]]}"), error);
}

TEST_CASE("builtin links and parameters") {
  CHECK(builtin_link("circle").components.size() == 1);
  CHECK(builtin_link("hopf").components.size() == 2);
  CHECK(builtin_link("borromean").components.size() == 3);
  CHECK(builtin_link("torus", {"p=2", "q=4"}).components.size() == 2);
  CHECK(builtin_link("hopf", {"n=120"}).components[0].size() == 120);
  CHECK_THROWS_AS(builtin_link("klein"), error);
  CHECK_THROWS_AS(builtin_link("hopf", {"n=2"}), error);
  CHECK_THROWS_AS(builtin_link("hopf", {"bogus=1"}), error);
}

TEST_CASE("metrics of the unit circle polygon") {
  link_metrics m = metrics(builtin_link("circle"));
  // vertices on the unit circle: turning radius and enclosing ball are exact
  CHECK(m.min_rad == doctest::Approx(1.0));
  CHECK(m.thickness == doctest::Approx(1.0));
  CHECK(m.tau == doctest::Approx(1.0));
  CHECK(m.ball_radius == doctest::Approx(1.0));
  CHECK(m.total_length == doctest::Approx(2 * 3.14159265358979).epsilon(1e-4));
  CHECK(m.rop == doctest::Approx(m.total_length));
  CHECK(m.comp_rop.size() == 1);
}

TEST_CASE("metrics of the Hopf fixture") {
  link_metrics m = metrics(builtin_link("hopf"));
  // two unit circles in orthogonal planes, centers distance 1 apart
  CHECK(m.thickness == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(m.ball_radius == doctest::Approx(1.5));
  CHECK(m.ball_center.x == doctest::Approx(0.5));
  CHECK(m.tau == doctest::Approx(1.0 / 3).epsilon(1e-3));
  CHECK(m.rop == doctest::Approx(25.134).epsilon(1e-3));
  CHECK(m.lengths.size() == 2);
  CHECK(m.lengths[0] == doctest::Approx(m.lengths[1]));
}

TEST_CASE("ropelength and tau are scale invariant") {
  link_metrics a = metrics(builtin_link("hopf", {"n=90"}));
  link_metrics b = metrics(scaled(builtin_link("hopf", {"n=90"}), 7.5));
  CHECK(b.rop == doctest::Approx(a.rop).epsilon(1e-9));
  CHECK(b.tau == doctest::Approx(a.tau).epsilon(1e-9));
  CHECK(b.total_length == doctest::Approx(7.5 * a.total_length).epsilon(1e-9));
}

TEST_CASE("enclosing ball on hand-checked point sets") {
  vec3 c;
  double r;
  enclosing_ball({{0, 0, 0}, {2, 0, 0}}, c, r);
  CHECK(c.x == doctest::Approx(1.0));
  CHECK(r == doctest::Approx(1.0));
  enclosing_ball({{1, 1, 0}, {-1, 1, 0}, {1, -1, 0}, {-1, -1, 0}}, c, r);
  CHECK(norm(c) == doctest::Approx(0.0));
  CHECK(r == doctest::Approx(std::sqrt(2.0)));
  // containment on a scattered set
  std::vector<vec3> pts;
  for (int i = 0; i < 40; ++i)
    pts.push_back({std::cos(0.7 * i) * (i % 5), std::sin(1.3 * i) * (i % 7), 0.1 * i});
  enclosing_ball(pts, c, r);
  for (const vec3& p : pts) CHECK(norm(p - c) <= r + 1e-9);
}

TEST_CASE("projection of a flat circle is empty and direction-sensitive") {
  poly_link circle = builtin_link("circle");
  projection_result p = project(circle, vec3{0, 0, 1});
  CHECK(p.diagram.components() == 1);
  CHECK(p.diagram.arrow_count() == 0);
  // in-plane view: everything overlaps
  CHECK_THROWS_AS(project(circle, vec3{1, 0, 0}), error);
  CHECK_NOTHROW(project_generic(circle, 11));
}

TEST_CASE("projected Hopf diagrams always carry linking number -1") {
  poly_link hopf = builtin_link("hopf", {"n=120"});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    projection_result p = project_generic(hopf, seed);
    CHECK(linking_number(p.diagram, 0, 1) == -1);
    CHECK(p.diagram.arrow_count() >= 2);
  }
}

TEST_CASE("quadrature linking integral matches the diagram invariant") {
  poly_link hopf = builtin_link("hopf");
  pair_integral pi = gauss_pair_integral(hopf, 0, 1);
  CHECK(pi.lk == doctest::Approx(-1.0).epsilon(1e-3));
  CHECK(pi.aov == doctest::Approx(1.18893).epsilon(1e-4));
  CHECK(pi.aov >= std::abs(pi.lk) - 1e-9);
  CHECK_THROWS_AS(gauss_pair_integral(hopf, 0, 0), error);
  CHECK_THROWS_AS(gauss_pair_integral(hopf, 0, 2), error);
}

TEST_CASE("coplanar far-apart circles have vanishing integrals") {
  poly_link sep = builtin_link("separated_circles", {"d=3"});
  pair_integral pi = gauss_pair_integral(sep, 0, 1, 256);
  CHECK(pi.lk == doctest::Approx(0.0));
  CHECK(pi.aov == doctest::Approx(0.0));
  projection_result p = project_generic(sep, 3);
  CHECK(linking_number(p.diagram, 0, 1) == 0);
}

TEST_CASE("planar curves have zero self overlap") {
  CHECK(self_overlap_integral(builtin_link("circle"), 0, 256) == doctest::Approx(0.0));
  CHECK(self_overlap_integral(builtin_link("torus"), 0, 256) > 1.0);
}

TEST_CASE("Monte Carlo crossing averages are reproducible and consistent") {
  poly_link hopf = builtin_link("hopf", {"n=120"});
  average_counts a = sample_average_counts(hopf, 400, 9);
  average_counts b = sample_average_counts(hopf, 400, 9);
  CHECK(a.cr_mean == b.cr_mean);
  CHECK(a.ov_mean == b.ov_mean);
  CHECK(a.samples == 400);
  // every projection of a linked pair shows at least two crossings
  CHECK(a.ov_min >= 2);
  CHECK(a.cr_mean >= a.ov_mean);
  // the quadrature overlap integral predicts the overcrossing average:
  // ov averages 2 * aov over directions
  pair_integral pi = gauss_pair_integral(hopf, 0, 1, 256);
  double pred = 2 * pi.aov;
  double band = 3 * a.ov_sigma + 0.02 * pred;  // sampling + mesh error
  CHECK(std::abs(a.ov_mean - pred) <= band);
  // the deterministic spiral grid agrees with Monte Carlo
  average_counts g = grid_average_counts(hopf, 400);
  CHECK(std::abs(g.ov_mean - pred) <= band);
}
