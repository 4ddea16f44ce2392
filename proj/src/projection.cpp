#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gausslink/geometry.hpp"

namespace gausslink {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct frame {
  vec3 e1, e2, u;
};

frame basis_for(const vec3& direction) {
  vec3 u = normalized(direction);
  vec3 axis{1, 0, 0};
  if (std::abs(u.y) < std::abs(u.x)) axis = {0, 1, 0};
  if (std::abs(u.z) < std::abs(u.x) && std::abs(u.z) < std::abs(u.y)) axis = {0, 0, 1};
  vec3 e1 = normalized(cross(u, axis));
  vec3 e2 = cross(u, e1);
  return {e1, e2, u};
}

struct flat_point {
  double x, y, h;
};

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

struct passage {
  int crossing;
  double along;  // parameter of this passage on its edge
  bool over;
};

}  // namespace

projection_result project(const poly_link& link, const vec3& direction) {
  validate(link);
  frame f = basis_for(direction);

  std::vector<std::vector<flat_point>> flat;
  double span = 0;
  for (const auto& comp : link.components) {
    std::vector<flat_point> pts;
    for (const vec3& v : comp) {
      flat_point p{dot(v, f.e1), dot(v, f.e2), dot(v, f.u)};
      span = std::max({span, std::abs(p.x), std::abs(p.y), std::abs(p.h)});
      pts.push_back(p);
    }
    flat.push_back(std::move(pts));
  }
  const double eps_b = 1e-9;             // parameter margin at segment ends
  const double eps_h = 1e-9 * (span + 1);  // height separation required at a crossing

  struct edge_ref {
    int comp, idx;
  };
  std::vector<edge_ref> edges;
  for (int c = 0; c < static_cast<int>(flat.size()); ++c)
    for (int i = 0; i < static_cast<int>(flat[static_cast<size_t>(c)].size()); ++i)
      edges.push_back(edge_ref{c, i});

  auto endpoints = [&](const edge_ref& e, flat_point& a, flat_point& b) {
    const auto& comp = flat[static_cast<size_t>(e.comp)];
    a = comp[static_cast<size_t>(e.idx)];
    b = comp[(static_cast<size_t>(e.idx) + 1) % comp.size()];
  };

  std::vector<int> signs;
  std::vector<std::vector<std::vector<passage>>> by_edge(flat.size());
  for (size_t c = 0; c < flat.size(); ++c) by_edge[c].resize(flat[c].size());

  for (size_t ei = 0; ei < edges.size(); ++ei) {
    for (size_t ej = ei + 1; ej < edges.size(); ++ej) {
      const edge_ref &ea = edges[ei], &eb = edges[ej];
      if (ea.comp == eb.comp) {
        int n = static_cast<int>(flat[static_cast<size_t>(ea.comp)].size());
        int d = std::abs(ea.idx - eb.idx);
        if (d == 0 || d == 1 || d == n - 1) continue;  // same or vertex-sharing edges
      }
      flat_point a0, a1, b0, b1;
      endpoints(ea, a0, a1);
      endpoints(eb, b0, b1);
      double d1x = a1.x - a0.x, d1y = a1.y - a0.y;
      double d2x = b1.x - b0.x, d2y = b1.y - b0.y;
      double rx = b0.x - a0.x, ry = b0.y - a0.y;
      double denom = cross2(d1x, d1y, d2x, d2y);
      double scale = std::hypot(d1x, d1y) * std::hypot(d2x, d2y);
      if (std::abs(denom) <= 1e-12 * scale) {
        // parallel in projection: only collinear overlap is a problem
        double off = cross2(d1x, d1y, rx, ry);
        if (std::abs(off) <= eps_b * scale) {
          double len1 = std::hypot(d1x, d1y);
          if (len1 > 0) {
            double t0 = (rx * d1x + ry * d1y) / (len1 * len1);
            double t1 = t0 + (d2x * d1x + d2y * d1y) / (len1 * len1);
            if (std::max(std::min(t0, t1), 0.0) <= std::min(std::max(t0, t1), 1.0) + eps_b)
              throw error(errc::non_generic_direction, "overlapping collinear segments");
          }
        }
        continue;
      }
      double s = cross2(rx, ry, d2x, d2y) / denom;
      double t = cross2(rx, ry, d1x, d1y) / denom;
      if (s < -eps_b || s > 1 + eps_b || t < -eps_b || t > 1 + eps_b) continue;
      if (s < eps_b || s > 1 - eps_b || t < eps_b || t > 1 - eps_b)
        throw error(errc::non_generic_direction, "crossing at a segment end");
      double h1 = a0.h + s * (a1.h - a0.h);
      double h2 = b0.h + t * (b1.h - b0.h);
      if (std::abs(h1 - h2) <= eps_h)
        throw error(errc::non_generic_direction, "strands at equal height");
      bool a_over = h1 > h2;
      // positive crossing: over direction, under direction, view direction
      // form a positive frame; in the plane that is the 2d cross product
      double det = a_over ? cross2(d1x, d1y, d2x, d2y) : cross2(d2x, d2y, d1x, d1y);
      int id = static_cast<int>(signs.size());
      signs.push_back(det > 0 ? 1 : -1);
      by_edge[static_cast<size_t>(ea.comp)][static_cast<size_t>(ea.idx)].push_back(
          passage{id, s, a_over});
      by_edge[static_cast<size_t>(eb.comp)][static_cast<size_t>(eb.idx)].push_back(
          passage{id, t, !a_over});
    }
  }

  std::vector<std::vector<endpoint>> seqs;
  for (auto& comp : by_edge) {
    std::vector<endpoint> seq;
    for (auto& edge : comp) {
      std::sort(edge.begin(), edge.end(),
                [](const passage& a, const passage& b) { return a.along < b.along; });
      for (size_t k = 0; k + 1 < edge.size(); ++k)
        if (edge[k + 1].along - edge[k].along <= eps_b)
          throw error(errc::non_generic_direction, "crossings too close on one segment");
      for (const passage& p : edge)
        seq.push_back(endpoint{p.crossing, p.over ? role::tail : role::head});
    }
    seqs.push_back(std::move(seq));
  }
  return projection_result{gauss_diagram::from_sequences(std::move(seqs), std::move(signs)),
                           f.u};
}

namespace {

struct sampled_curve {
  std::vector<vec3> point;    // midpoint of each arc-length cell
  std::vector<vec3> tangent;  // unit tangent there
  double step = 0;            // cell arc length
};

sampled_curve sample_curve(const std::vector<vec3>& comp, int grid) {
  size_t n = comp.size();
  std::vector<double> cum(n + 1, 0);
  for (size_t i = 0; i < n; ++i)
    cum[i + 1] = cum[i] + norm(comp[(i + 1) % n] - comp[i]);
  double total = cum[n];
  sampled_curve sc;
  sc.step = total / grid;
  size_t edge = 0;
  for (int k = 0; k < grid; ++k) {
    double s = (k + 0.5) * sc.step;
    while (edge + 1 < n && cum[edge + 1] <= s) ++edge;
    vec3 a = comp[edge], b = comp[(edge + 1) % n];
    double f = (s - cum[edge]) / (cum[edge + 1] - cum[edge]);
    sc.point.push_back(a + f * (b - a));
    sc.tangent.push_back(normalized(b - a));
  }
  return sc;
}

}  // namespace

pair_integral gauss_pair_integral(const poly_link& link, int i, int j, int grid) {
  validate(link);
  int nc = static_cast<int>(link.components.size());
  if (i < 0 || i >= nc || j < 0 || j >= nc)
    throw error(errc::component_range, "component index out of range");
  if (i == j) throw error(errc::duplicate_index, "pair integral needs two components");
  if (grid < 4) throw error(errc::resolution_too_low, "grid must be at least 4");

  sampled_curve c1 = sample_curve(link.components[static_cast<size_t>(i)], grid);
  sampled_curve c2 = sample_curve(link.components[static_cast<size_t>(j)], grid);
  double lk = 0, aov = 0;
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      vec3 r = c1.point[static_cast<size_t>(a)] - c2.point[static_cast<size_t>(b)];
      double rr = norm(r);
      double w = dot(cross(c1.tangent[static_cast<size_t>(a)], c2.tangent[static_cast<size_t>(b)]),
                     r) /
                 (rr * rr * rr);
      lk += w;
      aov += std::abs(w);
    }
  }
  double cell = c1.step * c2.step / (4 * kPi);
  return pair_integral{lk * cell, aov * cell};
}

double self_overlap_integral(const poly_link& link, int i, int grid) {
  validate(link);
  if (i < 0 || i >= static_cast<int>(link.components.size()))
    throw error(errc::component_range, "component index out of range");
  if (grid < 4) throw error(errc::resolution_too_low, "grid must be at least 4");

  sampled_curve c = sample_curve(link.components[static_cast<size_t>(i)], grid);
  double aov = 0;
  for (int a = 0; a < grid; ++a) {
    for (int b = a + 1; b < grid; ++b) {
      vec3 r = c.point[static_cast<size_t>(a)] - c.point[static_cast<size_t>(b)];
      double rr = norm(r);
      aov += 2 * std::abs(dot(cross(c.tangent[static_cast<size_t>(a)],
                                    c.tangent[static_cast<size_t>(b)]),
                              r)) /
             (rr * rr * rr);
    }
  }
  return aov * c.step * c.step / (4 * kPi);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double to_unit(std::uint64_t h) { return (h >> 11) * 0x1.0p-53; }

// Direction k, retry a: fully determined by (seed, k, a).
vec3 random_direction(std::uint64_t seed, long long k, int attempt) {
  std::uint64_t h = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(k) * 64 +
                                                 static_cast<std::uint64_t>(attempt) + 1));
  double z = 1 - 2 * to_unit(h);
  double phi = 2 * kPi * to_unit(splitmix64(h));
  double rho = std::sqrt(std::max(0.0, 1 - z * z));
  return vec3{rho * std::cos(phi), rho * std::sin(phi), z};
}

vec3 spiral_direction(long long k, long long n, int attempt) {
  double z = 1 - (2.0 * k + 1) / static_cast<double>(n);
  double phi = static_cast<double>(k) * kPi * (3 - std::sqrt(5.0)) + attempt * 1e-6;
  double rho = std::sqrt(std::max(0.0, 1 - z * z));
  return vec3{rho * std::cos(phi), rho * std::sin(phi), z};
}

template <typename DirFn>
average_counts averages(const poly_link& link, long long samples, DirFn&& dir_for) {
  validate(link);
  if (samples <= 0) throw error(errc::non_positive, "sample count must be positive");
  average_counts out;
  double cr_sum = 0, cr_sq = 0, ov_sum = 0, ov_sq = 0;
  out.cr_min = -1;
  out.ov_min = -1;
  for (long long k = 0; k < samples; ++k) {
    projection_result pr = [&] {
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 64)
          throw error(errc::degenerate_geometry, "no generic projection direction found");
        try {
          return project(link, dir_for(k, attempt));
        } catch (const error& e) {
          if (e.code() != errc::non_generic_direction) throw;
          ++out.resampled;
        }
      }
    }();
    long long cr = pr.diagram.arrow_count();
    long long ov = 0;
    for (int a = 0; a < pr.diagram.arrow_count(); ++a)
      if (pr.diagram.tail(a).comp != pr.diagram.head(a).comp) ++ov;
    cr_sum += static_cast<double>(cr);
    cr_sq += static_cast<double>(cr) * static_cast<double>(cr);
    ov_sum += static_cast<double>(ov);
    ov_sq += static_cast<double>(ov) * static_cast<double>(ov);
    if (out.cr_min < 0 || cr < out.cr_min) out.cr_min = cr;
    if (out.ov_min < 0 || ov < out.ov_min) out.ov_min = ov;
    ++out.samples;
  }
  double n = static_cast<double>(out.samples);
  out.cr_mean = cr_sum / n;
  out.ov_mean = ov_sum / n;
  if (out.samples > 1) {
    double cr_var = std::max(0.0, (cr_sq - n * out.cr_mean * out.cr_mean) / (n - 1));
    double ov_var = std::max(0.0, (ov_sq - n * out.ov_mean * out.ov_mean) / (n - 1));
    out.cr_sigma = std::sqrt(cr_var / n);
    out.ov_sigma = std::sqrt(ov_var / n);
  }
  return out;
}

}  // namespace

average_counts sample_average_counts(const poly_link& link, long long samples,
                                     std::uint64_t seed) {
  return averages(link, samples,
                  [seed](long long k, int attempt) { return random_direction(seed, k, attempt); });
}

projection_result project_generic(const poly_link& link, std::uint64_t seed) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      return project(link, random_direction(seed, 0, attempt));
    } catch (const error& e) {
      if (e.code() != errc::non_generic_direction) throw;
    }
  }
  throw error(errc::degenerate_geometry, "no generic projection direction found");
}

average_counts grid_average_counts(const poly_link& link, long long samples) {
  return averages(link, samples, [samples](long long k, int attempt) {
    return spiral_direction(k, samples, attempt);
  });
}

}  // namespace gausslink
