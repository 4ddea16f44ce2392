#include "gausslink/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "json.hpp"

namespace gausslink {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

vec3 operator+(const vec3& a, const vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
vec3 operator-(const vec3& a, const vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
vec3 operator*(double s, const vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(const vec3& a, const vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
vec3 cross(const vec3& a, const vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const vec3& a) { return std::sqrt(dot(a, a)); }
vec3 normalized(const vec3& a) {
  double n = norm(a);
  if (n == 0) throw error(errc::degenerate_geometry, "cannot normalize the zero vector");
  return (1.0 / n) * a;
}

void validate(const poly_link& link) {
  if (link.components.empty()) throw error(errc::bad_input, "link needs at least one component");
  for (const auto& comp : link.components) {
    if (comp.size() < 3)
      throw error(errc::bad_input, "closed polygon needs at least 3 vertices");
    for (const vec3& v : comp)
      if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
        throw error(errc::bad_input, "vertex coordinates must be finite");
    for (size_t i = 0; i < comp.size(); ++i) {
      const vec3& a = comp[i];
      const vec3& b = comp[(i + 1) % comp.size()];
      if (norm(b - a) == 0)
        throw error(errc::degenerate_geometry, "repeated consecutive vertex");
    }
  }
}

poly_link parse_poly_link(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::syntax_error, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw error(errc::bad_input, "expected an object with a components array");
  poly_link link;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw error(errc::bad_input, "name must be a string");
    link.name = j["name"].get<std::string>();
  }
  for (const auto& comp : j["components"]) {
    if (!comp.is_array()) throw error(errc::bad_input, "component must be an array of vertices");
    std::vector<vec3> verts;
    for (const auto& v : comp) {
      if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
          !v[2].is_number())
        throw error(errc::bad_input, "vertex must be [x, y, z]");
      verts.push_back(vec3{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    link.components.push_back(std::move(verts));
  }
  validate(link);
  return link;
}

std::string dump_poly_link(const poly_link& link) {
  nlohmann::json j;
  j["name"] = link.name;
  j["components"] = nlohmann::json::array();
  for (const auto& comp : link.components) {
    nlohmann::json verts = nlohmann::json::array();
    for (const vec3& v : comp) verts.push_back({v.x, v.y, v.z});
    j["components"].push_back(std::move(verts));
  }
  return j.dump(2) + "\n";
}

namespace {

// Closest points of segments a0-a1 and b0-b1 (Ericson's clamped form).
// Returns squared distance; s and t are the parameters of the closest pair.
double segment_distance_sq(const vec3& a0, const vec3& a1, const vec3& b0, const vec3& b1,
                           double& s, double& t) {
  vec3 d1 = a1 - a0, d2 = b1 - b0, r = a0 - b0;
  double A = dot(d1, d1), E = dot(d2, d2), F = dot(d2, r);
  double C = dot(d1, r), B = dot(d1, d2);
  double denom = A * E - B * B;
  s = (denom > 0) ? std::clamp((B * F - C * E) / denom, 0.0, 1.0) : 0.0;
  t = (E > 0) ? std::clamp((B * s + F) / E, 0.0, 1.0) : 0.0;
  if (E > 0) {
    // re-derive s for the clamped t, then clamp again
    s = (A > 0) ? std::clamp((B * t - C) / A, 0.0, 1.0) : 0.0;
  }
  vec3 diff = (a0 + s * d1) - (b0 + t * d2);
  return dot(diff, diff);
}

double circumradius(const vec3& a, const vec3& b, const vec3& c) {
  double ab = norm(b - a), bc = norm(c - b), ca = norm(a - c);
  double area2 = norm(cross(b - a, c - a));  // twice the triangle area
  if (area2 <= 1e-14 * ab * bc) return std::numeric_limits<double>::infinity();
  return ab * bc * ca / (2 * area2);
}

// True when moving off point p (a vertex of its polygon) along either
// incident edge does not decrease the distance to q.
bool vertex_is_critical(const std::vector<vec3>& comp, size_t vtx, const vec3& p, const vec3& q) {
  size_t n = comp.size();
  const vec3 to_q = q - p;
  double eps = 1e-9 * norm(to_q);
  const vec3 next = comp[(vtx + 1) % n] - comp[vtx];
  const vec3 prev = comp[(vtx + n - 1) % n] - comp[vtx];
  return dot(normalized(next), to_q) <= eps && dot(normalized(prev), to_q) <= eps;
}

struct strut_check {
  const std::vector<vec3>& comp;
  size_t edge;  // closest point lies on edge (edge, edge+1)
  double param;

  bool critical(const vec3& p, const vec3& q) const {
    if (param > 1e-12 && param < 1 - 1e-12) return true;  // interior point
    size_t vtx = (param <= 1e-12) ? edge : (edge + 1) % comp.size();
    return vertex_is_critical(comp, vtx, p, q);
  }
};

}  // namespace

link_metrics metrics(const poly_link& link) {
  validate(link);
  link_metrics m;
  for (const auto& comp : link.components) {
    double len = 0;
    for (size_t i = 0; i < comp.size(); ++i) len += norm(comp[(i + 1) % comp.size()] - comp[i]);
    m.lengths.push_back(len);
    m.total_length += len;
  }

  m.min_rad = std::numeric_limits<double>::infinity();
  for (const auto& comp : link.components) {
    size_t n = comp.size();
    for (size_t i = 0; i < n; ++i)
      m.min_rad = std::min(m.min_rad, circumradius(comp[(i + n - 1) % n], comp[i], comp[(i + 1) % n]));
  }

  m.pair_clearance = std::numeric_limits<double>::infinity();
  int ncomp = static_cast<int>(link.components.size());
  for (int c1 = 0; c1 < ncomp; ++c1) {
    const auto& A = link.components[static_cast<size_t>(c1)];
    size_t na = A.size();
    for (int c2 = c1; c2 < ncomp; ++c2) {
      const auto& B = link.components[static_cast<size_t>(c2)];
      size_t nb = B.size();
      for (size_t i = 0; i < na; ++i) {
        size_t jstart = (c1 == c2) ? i + 1 : 0;
        for (size_t j = jstart; j < nb; ++j) {
          if (c1 == c2) {
            // skip the edge itself and edges sharing a vertex
            if (i == j || (i + 1) % na == j || (j + 1) % nb == i) continue;
          }
          double s, t;
          double d2 = segment_distance_sq(A[i], A[(i + 1) % na], B[j], B[(j + 1) % nb], s, t);
          if (d2 >= m.pair_clearance * m.pair_clearance) continue;
          if (c1 == c2) {
            vec3 p = A[i] + s * (A[(i + 1) % na] - A[i]);
            vec3 q = B[j] + t * (B[(j + 1) % nb] - B[j]);
            if (d2 <= 0) throw error(errc::degenerate_geometry, "self-intersecting component");
            if (!strut_check{A, i, s}.critical(p, q)) continue;
            if (!strut_check{B, j, t}.critical(q, p)) continue;
          } else if (d2 <= 0) {
            throw error(errc::degenerate_geometry, "intersecting components");
          }
          m.pair_clearance = std::min(m.pair_clearance, std::sqrt(d2));
        }
      }
    }
  }

  m.thickness = std::min(m.min_rad, m.pair_clearance / 2);
  if (!(m.thickness > 0) || !std::isfinite(m.thickness))
    throw error(errc::degenerate_geometry, "link has no positive tube thickness");
  m.rop = m.total_length / m.thickness;
  for (double len : m.lengths) m.comp_rop.push_back(len / m.thickness);

  std::vector<vec3> pts;
  for (const auto& comp : link.components) pts.insert(pts.end(), comp.begin(), comp.end());
  enclosing_ball(pts, m.ball_center, m.ball_radius);
  m.tau = m.thickness / m.ball_radius;
  return m;
}

namespace {

struct ball {
  vec3 c;
  double r = -1;
  bool contains(const vec3& p) const { return r >= 0 && norm(p - c) <= r * (1 + 1e-10) + 1e-12; }
};

ball ball_of_2(const vec3& a, const vec3& b) { return {0.5 * (a + b), 0.5 * norm(b - a)}; }

ball ball_of_3(const vec3& a, const vec3& b, const vec3& c) {
  vec3 ab = b - a, ac = c - a;
  vec3 n = cross(ab, ac);
  double nn = dot(n, n);
  if (nn <= 1e-20 * dot(ab, ab) * dot(ac, ac)) {
    // nearly collinear: the two farthest points already span the ball
    ball best = ball_of_2(a, b);
    ball bc = ball_of_2(b, c), ca = ball_of_2(c, a);
    if (bc.r > best.r) best = bc;
    if (ca.r > best.r) best = ca;
    return best;
  }
  vec3 offset = (1.0 / (2 * nn)) * (dot(ac, ac) * cross(n, ab) + dot(ab, ab) * cross(ac, n));
  return {a + offset, norm(offset)};
}

ball ball_of_4(const vec3& a, const vec3& b, const vec3& c, const vec3& d) {
  // circumsphere from the linear system 2(p_i - a) . x = |p_i|^2 - |a|^2
  vec3 rows[3] = {b - a, c - a, d - a};
  double rhs[3] = {0.5 * (dot(b, b) - dot(a, a)), 0.5 * (dot(c, c) - dot(a, a)),
                   0.5 * (dot(d, d) - dot(a, a))};
  double det = dot(rows[0], cross(rows[1], rows[2]));
  double scale = norm(rows[0]) * norm(rows[1]) * norm(rows[2]);
  if (std::abs(det) <= 1e-14 * std::max(scale, 1e-300)) {
    // nearly coplanar: fall back to the best 3-point ball
    ball best = ball_of_3(a, b, c);
    for (const ball& cand : {ball_of_3(a, b, d), ball_of_3(a, c, d), ball_of_3(b, c, d)})
      if (cand.r > best.r) best = cand;
    return best;
  }
  // Cramer's rule, column by column
  vec3 col0 = cross(rows[1], rows[2]);
  vec3 col1 = cross(rows[2], rows[0]);
  vec3 col2 = cross(rows[0], rows[1]);
  vec3 center{(rhs[0] * col0.x + rhs[1] * col1.x + rhs[2] * col2.x) / det,
              (rhs[0] * col0.y + rhs[1] * col1.y + rhs[2] * col2.y) / det,
              (rhs[0] * col0.z + rhs[1] * col1.z + rhs[2] * col2.z) / det};
  return {center, norm(center - a)};
}

ball trivial_ball(const std::vector<vec3>& support) {
  switch (support.size()) {
    case 0: return {vec3{}, -1};
    case 1: return {support[0], 0};
    case 2: return ball_of_2(support[0], support[1]);
    case 3: return ball_of_3(support[0], support[1], support[2]);
    default: return ball_of_4(support[0], support[1], support[2], support[3]);
  }
}

ball welzl(std::vector<vec3>& pts, size_t n, std::vector<vec3>& support) {
  if (n == 0 || support.size() == 4) return trivial_ball(support);
  ball b = welzl(pts, n - 1, support);
  if (b.contains(pts[n - 1])) return b;
  support.push_back(pts[n - 1]);
  b = welzl(pts, n - 1, support);
  support.pop_back();
  // move-to-front improves the expected recursion
  vec3 p = pts[n - 1];
  pts.erase(pts.begin() + static_cast<long>(n - 1));
  pts.insert(pts.begin(), p);
  return b;
}

}  // namespace

void enclosing_ball(const std::vector<vec3>& points, vec3& center, double& radius) {
  if (points.empty()) throw error(errc::bad_input, "enclosing ball of an empty point set");
  std::vector<vec3> pts = points;
  std::mt19937 rng(0x5eed);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<vec3> support;
  ball b = welzl(pts, pts.size(), support);
  center = b.c;
  radius = std::max(b.r, 0.0);
}

namespace {

double param_or(const std::vector<std::string>& params, const std::string& key, double fallback) {
  for (const std::string& p : params) {
    size_t eq = p.find('=');
    if (eq == std::string::npos)
      throw error(errc::bad_params, "parameter needs key=value form: " + p);
    if (p.substr(0, eq) != key) continue;
    try {
      size_t used = 0;
      double v = std::stod(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
      return v;
    } catch (const std::exception&) {
      throw error(errc::bad_params, "bad numeric value in: " + p);
    }
  }
  return fallback;
}

void check_param_keys(const std::vector<std::string>& params,
                      std::initializer_list<const char*> allowed) {
  for (const std::string& p : params) {
    size_t eq = p.find('=');
    if (eq == std::string::npos)
      throw error(errc::bad_params, "parameter needs key=value form: " + p);
    std::string key = p.substr(0, eq);
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw error(errc::bad_params, "unknown parameter: " + key);
  }
}

std::vector<vec3> planar_circle(double r, int n, const vec3& center, int plane) {
  std::vector<vec3> verts;
  verts.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double t = 2 * kPi * k / n;
    vec3 v = center;
    if (plane == 0) {  // xy
      v.x += r * std::cos(t);
      v.y += r * std::sin(t);
    } else {  // xz
      v.x += r * std::cos(t);
      v.z += r * std::sin(t);
    }
    verts.push_back(v);
  }
  return verts;
}

int int_param(const std::vector<std::string>& params, const std::string& key, int fallback) {
  double v = param_or(params, key, fallback);
  if (v != std::floor(v)) throw error(errc::bad_params, key + " must be an integer");
  return static_cast<int>(v);
}

}  // namespace

poly_link builtin_link(const std::string& name, const std::vector<std::string>& params) {
  poly_link link;
  link.name = name;
  if (name == "circle") {
    check_param_keys(params, {"r", "n"});
    double r = param_or(params, "r", 1.0);
    int n = int_param(params, "n", 360);
    if (r <= 0 || n < 3) throw error(errc::bad_params, "circle needs r > 0 and n >= 3");
    link.components.push_back(planar_circle(r, n, vec3{}, 0));
  } else if (name == "hopf") {
    check_param_keys(params, {"n"});
    int n = int_param(params, "n", 360);
    if (n < 3) throw error(errc::bad_params, "hopf needs n >= 3");
    link.components.push_back(planar_circle(1.0, n, vec3{}, 0));
    link.components.push_back(planar_circle(1.0, n, vec3{1, 0, 0}, 1));
  } else if (name == "borromean") {
    check_param_keys(params, {"n"});
    int n = int_param(params, "n", 360);
    if (n < 3) throw error(errc::bad_params, "borromean needs n >= 3");
    std::vector<vec3> e1, e2, e3;
    for (int k = 0; k < n; ++k) {
      double t = 2 * kPi * k / n;
      e1.push_back(vec3{2 * std::cos(t), std::sin(t), 0});
      e2.push_back(vec3{0, 2 * std::cos(t), std::sin(t)});
      e3.push_back(vec3{std::sin(t), 0, 2 * std::cos(t)});
    }
    link.components = {e1, e2, e3};
  } else if (name == "torus") {
    check_param_keys(params, {"p", "q", "n"});
    int p = int_param(params, "p", 2);
    int q = int_param(params, "q", 3);
    int n = int_param(params, "n", 720);
    if (p < 1 || q < 1 || n < 3) throw error(errc::bad_params, "torus needs p, q >= 1 and n >= 3");
    int d = std::gcd(p, q);
    const double R = 2.0, r = 1.0;
    for (int k = 0; k < d; ++k) {
      std::vector<vec3> verts;
      for (int s = 0; s < n; ++s) {
        double t = 2 * kPi * s / n;
        double phi = (p / d) * t;
        double psi = (q / d) * t + 2 * kPi * k / d;
        verts.push_back(vec3{(R + r * std::cos(psi)) * std::cos(phi),
                             (R + r * std::cos(psi)) * std::sin(phi), r * std::sin(psi)});
      }
      link.components.push_back(std::move(verts));
    }
  } else if (name == "separated_circles") {
    check_param_keys(params, {"d", "n"});
    double d = param_or(params, "d", 3.0);
    int n = int_param(params, "n", 360);
    if (d <= 2 || n < 3)
      throw error(errc::bad_params, "separated_circles needs d > 2 and n >= 3");
    link.components.push_back(planar_circle(1.0, n, vec3{}, 0));
    link.components.push_back(planar_circle(1.0, n, vec3{d, 0, 0}, 0));
  } else {
    throw error(errc::unknown_name, "unknown built-in link: " + name);
  }
  validate(link);
  return link;
}

}  // namespace gausslink
