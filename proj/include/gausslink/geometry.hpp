#pragma once

// Geometry of polygonal links: tube thickness, ropelength, projection to
// Gauss diagrams, and the curve integrals behind the crossing-number and
// linking estimates.
//
// A poly_link is a list of closed polygons; vertex i connects to vertex i+1
// and the last vertex connects back to the first.  Component c of a
// projected diagram is polygon c, based at the projection of vertex 0.

#include <cstdint>
#include <string>
#include <vector>

#include "gausslink/diagram.hpp"

namespace gausslink {

struct vec3 {
  double x = 0, y = 0, z = 0;
};

vec3 operator+(const vec3& a, const vec3& b);
vec3 operator-(const vec3& a, const vec3& b);
vec3 operator*(double s, const vec3& a);
double dot(const vec3& a, const vec3& b);
vec3 cross(const vec3& a, const vec3& b);
double norm(const vec3& a);
vec3 normalized(const vec3& a);

struct poly_link {
  std::string name;
  std::vector<std::vector<vec3>> components;
};

// Rejects empty links, components with fewer than 3 vertices, repeated
// consecutive vertices, and non-finite coordinates.
void validate(const poly_link& link);

// JSON round trip: {"name": ..., "components": [[[x,y,z], ...], ...]}.
poly_link parse_poly_link(const std::string& json_text);
std::string dump_poly_link(const poly_link& link);

struct link_metrics {
  std::vector<double> lengths;     // per component
  double total_length = 0;
  double min_rad = 0;              // smallest turning radius over vertex triples
  double pair_clearance = 0;       // smallest doubly-critical strut length
  double thickness = 0;            // min(min_rad, pair_clearance / 2)
  double rop = 0;                  // total_length / thickness
  std::vector<double> comp_rop;    // lengths[i] / thickness
  vec3 ball_center;                // minimal enclosing ball of the vertices
  double ball_radius = 0;
  double tau = 0;                  // thickness / ball_radius
};

// Thickness uses the doubly-critical distance filter: a same-component
// segment pair contributes only when its closest-point pair is a local
// minimum of the distance along the curve on both sides, so chords that
// merely hug the polygon do not collapse the estimate.  Cross-component
// pairs always count.
link_metrics metrics(const poly_link& link);

// Smallest ball containing all points (Welzl's move-to-front algorithm).
void enclosing_ball(const std::vector<vec3>& points, vec3& center, double& radius);

struct projection_result {
  gauss_diagram diagram;
  vec3 direction;
};

// Orthogonal projection along `direction`.  Throws non_generic_direction
// when the view is degenerate: crossings at segment ends, triple points,
// overlapping parallel segments, or equal heights at a crossing.
projection_result project(const poly_link& link, const vec3& direction);

// First generic projection among seeded random directions (up to 64 draws).
projection_result project_generic(const poly_link& link, std::uint64_t seed);

struct pair_integral {
  double lk = 0;   // signed Gauss linking integral
  double aov = 0;  // same integrand with |.|, the overlap number
};

// Composite-midpoint quadrature of the Gauss integral between components i
// and j (i != j) on a grid x grid arc-length mesh.
pair_integral gauss_pair_integral(const poly_link& link, int i, int j, int grid = 512);

// Self overlap of one component: the writhe-style |.| integral, diagonal
// terms excluded.  Twice this value estimates the average self-crossing
// count over projections.
double self_overlap_integral(const poly_link& link, int i, int grid = 512);

struct average_counts {
  long long samples = 0;    // accepted directions
  long long resampled = 0;  // non-generic draws that were redrawn
  double cr_mean = 0, cr_sigma = 0;  // all crossings per projection
  double ov_mean = 0, ov_sigma = 0;  // crossings between distinct components
  long long cr_min = 0;  // fewest crossings seen in any accepted projection
  long long ov_min = 0;
};

// Monte Carlo average over uniformly random directions.  Direction k of a
// run is derived from (seed, k, attempt), so results do not depend on
// evaluation order and rejected directions stay reproducible.
average_counts sample_average_counts(const poly_link& link, long long samples,
                                     std::uint64_t seed);

// Deterministic spiral-grid variant of the same averages.
average_counts grid_average_counts(const poly_link& link, long long samples);

// Built-in test shapes: circle, hopf, borromean, torus(p,q),
// separated_circles(d).  Parameters come as "key=value" items.
poly_link builtin_link(const std::string& name, const std::vector<std::string>& params = {});

}  // namespace gausslink
