#include "gausslink/codec.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace gausslink {

gauss_diagram parse_gauss_code(const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t sep = text.find('/', start);
    parts.push_back(text.substr(start, sep == std::string::npos ? sep : sep - start));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }

  std::vector<std::vector<endpoint>> seqs;
  std::map<long long, int> ids;   // external label -> arrow id
  std::vector<int> signs;
  for (const std::string& part : parts) {
    std::vector<endpoint> seq;
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
        throw error(errc::syntax_error, "bad token: " + tok);
      char sc = tok.back();
      if (sc != '+' && sc != '-') throw error(errc::syntax_error, "token needs +/- sign: " + tok);
      long long label = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size() - 1, label);
      if (ec != std::errc() || ptr != tok.data() + tok.size() - 1 || label <= 0)
        throw error(errc::syntax_error, "bad crossing label: " + tok);
      int sign = (sc == '+') ? 1 : -1;
      auto [it, inserted] = ids.emplace(label, static_cast<int>(signs.size()));
      if (inserted) {
        signs.push_back(sign);
      } else if (signs[static_cast<size_t>(it->second)] != sign) {
        throw error(errc::sign_mismatch, "crossing " + std::to_string(label) +
                                             " appears with both signs");
      }
      seq.push_back(endpoint{it->second, tok[0] == 'O' ? role::tail : role::head});
    }
    seqs.push_back(std::move(seq));
  }
  return gauss_diagram::from_sequences(std::move(seqs), std::move(signs));
}

std::string emit_gauss_code(const gauss_diagram& g) {
  // labels by first appearance, matching the parser's normalization
  std::vector<int> label(static_cast<size_t>(g.arrow_count()), 0);
  int next = 1;
  for (int c = 0; c < g.components(); ++c)
    for (const endpoint& ep : g.sequence(c))
      if (label[static_cast<size_t>(ep.arrow)] == 0) label[static_cast<size_t>(ep.arrow)] = next++;

  std::string out;
  for (int c = 0; c < g.components(); ++c) {
    if (c > 0) out += " / ";
    bool first = true;
    for (const endpoint& ep : g.sequence(c)) {
      if (!first) out += ' ';
      first = false;
      out += (ep.r == role::tail) ? 'O' : 'U';
      out += std::to_string(label[static_cast<size_t>(ep.arrow)]);
      out += (g.sign(ep.arrow) > 0) ? '+' : '-';
    }
  }
  return out;
}

namespace {

// Port-graph model of the standard pretzel diagram.  Each crossing has four
// ports (NW, NE, SW, SE); a strand entering a port leaves at the diagonally
// opposite one.  Column wiring stacks the crossings; horizontal bridges join
// adjacent columns at top and bottom, and the outer closure joins column 1 to
// column k.  Every port of the resulting graph has degree exactly two, so the
// diagram decomposes into cycles; the link is a knot iff there is one cycle.
constexpr int NW = 0, NE = 1, SW = 2, SE = 3;
constexpr int kDiag[4] = {SE, SW, NE, NW};

struct passage {
  int crossing;
  int port_in;  // entering port; exit is kDiag[port_in]
};

}  // namespace

gauss_diagram pretzel_diagram(const std::vector<int>& twists) {
  const int k = static_cast<int>(twists.size());
  if (k == 0) throw error(errc::bad_params, "pretzel needs at least one twist column");

  int total = 0;
  std::vector<int> col_first(static_cast<size_t>(k), -1);  // first crossing id per column
  std::vector<int> col_of;                                 // crossing id -> column
  for (int i = 0; i < k; ++i) {
    int m = std::abs(twists[static_cast<size_t>(i)]);
    if (m > 0) col_first[static_cast<size_t>(i)] = total;
    for (int j = 0; j < m; ++j) col_of.push_back(i);
    total += m;
  }

  // Node numbering: crossing ports first, then the 4k boundary connectors.
  auto cport = [](int c, int p) { return 4 * c + p; };
  const int base = 4 * total;
  auto tl = [&](int i) { return base + 4 * i + 0; };
  auto tr = [&](int i) { return base + 4 * i + 1; };
  auto bl = [&](int i) { return base + 4 * i + 2; };
  auto br = [&](int i) { return base + 4 * i + 3; };
  const int nodes = base + 4 * k;

  // Edges: external wires plus one internal diagonal passage per port pair.
  struct edge {
    int a, b;
    int crossing = -1;  // >= 0 marks an internal passage through this crossing
  };
  std::vector<edge> edges;
  std::vector<std::vector<int>> at(static_cast<size_t>(nodes));
  auto wire = [&](int a, int b, int crossing = -1) {
    at[static_cast<size_t>(a)].push_back(static_cast<int>(edges.size()));
    at[static_cast<size_t>(b)].push_back(static_cast<int>(edges.size()));
    edges.push_back(edge{a, b, crossing});
  };

  for (int c = 0; c < total; ++c) {
    wire(cport(c, NW), cport(c, SE), c);
    wire(cport(c, NE), cport(c, SW), c);
  }
  for (int i = 0; i < k; ++i) {
    int m = std::abs(twists[static_cast<size_t>(i)]);
    if (m == 0) {
      wire(tl(i), bl(i));
      wire(tr(i), br(i));
      continue;
    }
    int f = col_first[static_cast<size_t>(i)];
    wire(tl(i), cport(f, NW));
    wire(tr(i), cport(f, NE));
    for (int j = 0; j + 1 < m; ++j) {
      wire(cport(f + j, SW), cport(f + j + 1, NW));
      wire(cport(f + j, SE), cport(f + j + 1, NE));
    }
    wire(cport(f + m - 1, SW), bl(i));
    wire(cport(f + m - 1, SE), br(i));
  }
  for (int i = 0; i + 1 < k; ++i) {
    wire(tr(i), tl(i + 1));
    wire(br(i), bl(i + 1));
  }
  wire(tl(0), tr(k - 1));  // start edge: walk begins here, heading into column 1
  const int start_edge = static_cast<int>(edges.size()) - 1;
  wire(bl(0), br(k - 1));

  for (int n = 0; n < nodes; ++n)
    if (at[static_cast<size_t>(n)].size() != 2)
      throw error(errc::bad_params, "internal wiring fault in pretzel generator");

  // Walk the single cycle through tl(0), recording crossing passages.
  std::vector<passage> walk;
  int node = tl(0), in_edge = start_edge;
  do {
    const auto& inc = at[static_cast<size_t>(node)];
    int out_edge = (inc[0] == in_edge) ? inc[1] : inc[0];
    const edge& e = edges[static_cast<size_t>(out_edge)];
    if (e.crossing >= 0) {
      int port_in = (e.a == node ? e.a : e.b) % 4;
      walk.push_back(passage{e.crossing, port_in});
    }
    node = (e.a == node) ? e.b : e.a;
    in_edge = out_edge;
  } while (!(node == tl(0) && in_edge == start_edge));

  if (static_cast<int>(walk.size()) != 2 * total)
    throw error(errc::not_a_knot, "pretzel closes into more than one component");

  // Each crossing sees two passages, one per diagonal.  The over passage runs
  // along NE-SW when the column twist is positive, along NW-SE otherwise.
  // The crossing sign is the sign of det(dir_over, dir_under) with the 2d
  // direction a passage takes through the crossing.
  auto dir = [](int port_in, double d[2]) {
    switch (port_in) {
      case NW: d[0] = 1; d[1] = -1; break;   // toward SE
      case SE: d[0] = -1; d[1] = 1; break;
      case NE: d[0] = -1; d[1] = -1; break;  // toward SW
      default: d[0] = 1; d[1] = 1; break;    // SW toward NE
    }
  };
  std::vector<int> sign(static_cast<size_t>(total), 0);
  std::vector<double> over_dir(static_cast<size_t>(2 * total), 0.0);
  std::vector<double> under_dir(static_cast<size_t>(2 * total), 0.0);
  for (const passage& p : walk) {
    bool on_ne_sw = (p.port_in == NE || p.port_in == SW);
    bool over = (twists[static_cast<size_t>(col_of[static_cast<size_t>(p.crossing)])] > 0)
                    ? on_ne_sw
                    : !on_ne_sw;
    double d[2];
    dir(p.port_in, d);
    auto* slot = over ? over_dir.data() : under_dir.data();
    slot[2 * p.crossing] = d[0];
    slot[2 * p.crossing + 1] = d[1];
  }
  for (int c = 0; c < total; ++c) {
    double det = over_dir[static_cast<size_t>(2 * c)] * under_dir[static_cast<size_t>(2 * c + 1)] -
                 over_dir[static_cast<size_t>(2 * c + 1)] * under_dir[static_cast<size_t>(2 * c)];
    sign[static_cast<size_t>(c)] = det > 0 ? 1 : -1;
  }

  std::vector<endpoint> seq;
  std::vector<int> id(static_cast<size_t>(total), -1);
  std::vector<int> signs;
  for (const passage& p : walk) {
    if (id[static_cast<size_t>(p.crossing)] < 0) {
      id[static_cast<size_t>(p.crossing)] = static_cast<int>(signs.size());
      signs.push_back(sign[static_cast<size_t>(p.crossing)]);
    }
    bool on_ne_sw = (p.port_in == NE || p.port_in == SW);
    bool over = (twists[static_cast<size_t>(col_of[static_cast<size_t>(p.crossing)])] > 0)
                    ? on_ne_sw
                    : !on_ne_sw;
    seq.push_back(endpoint{id[static_cast<size_t>(p.crossing)], over ? role::tail : role::head});
  }
  return gauss_diagram::from_sequences({std::move(seq)}, std::move(signs));
}

gauss_diagram double_twist_diagram(int m, int k) {
  const int am = std::abs(m), ak = std::abs(k);
  const int total = am + ak;
  if (total == 0) throw error(errc::not_a_knot, "D(0, 0) is a two-component unlink");

  // Plat closure of the 4-strand word sigma_2^m sigma_1^k.  Crossing c sits
  // on strand columns (col, col+1); the plat caps join columns (0,1) and
  // (2,3) at top and bottom.
  auto cport = [](int c, int p) { return 4 * c + p; };
  const int base = 4 * total;
  auto top = [&](int i) { return base + i; };
  auto bot = [&](int i) { return base + 4 + i; };
  const int nodes = base + 8;

  struct edge {
    int a, b;
    int crossing = -1;
  };
  std::vector<edge> edges;
  std::vector<std::vector<int>> at(static_cast<size_t>(nodes));
  auto wire = [&](int a, int b, int crossing = -1) {
    at[static_cast<size_t>(a)].push_back(static_cast<int>(edges.size()));
    at[static_cast<size_t>(b)].push_back(static_cast<int>(edges.size()));
    edges.push_back(edge{a, b, crossing});
  };

  for (int c = 0; c < total; ++c) {
    wire(cport(c, NW), cport(c, SE), c);
    wire(cport(c, NE), cport(c, SW), c);
  }
  int cur[4] = {top(0), top(1), top(2), top(3)};
  std::vector<int> gen(static_cast<size_t>(total));  // generator sign per crossing
  for (int c = 0; c < total; ++c) {
    const int col = (c < am) ? 1 : 0;
    // The two regions twist with opposite handedness in this projection; the
    // flip on k makes the closure realize the fraction m + 1/k rather than
    // m - 1/k.
    gen[static_cast<size_t>(c)] = (c < am) ? (m > 0 ? 1 : -1) : (k > 0 ? -1 : 1);
    wire(cur[col], cport(c, NW));
    wire(cur[col + 1], cport(c, NE));
    cur[col] = cport(c, SW);
    cur[col + 1] = cport(c, SE);
  }
  for (int i = 0; i < 4; ++i) wire(cur[i], bot(i));
  // Numerator-style closure: the bottom caps join columns (1,2) and (0,3),
  // so neither twist region sits against a cap on its own strand pair.
  wire(top(0), top(1));
  const int start_edge = static_cast<int>(edges.size()) - 1;
  wire(top(2), top(3));
  wire(bot(1), bot(2));
  wire(bot(0), bot(3));

  for (int n = 0; n < nodes; ++n)
    if (at[static_cast<size_t>(n)].size() != 2)
      throw error(errc::bad_params, "internal wiring fault in double twist generator");

  std::vector<passage> walk;
  int node = top(0), in_edge = start_edge;
  do {
    const auto& inc = at[static_cast<size_t>(node)];
    int out_edge = (inc[0] == in_edge) ? inc[1] : inc[0];
    const edge& e = edges[static_cast<size_t>(out_edge)];
    if (e.crossing >= 0) walk.push_back(passage{e.crossing, (e.a == node ? e.a : e.b) % 4});
    node = (e.a == node) ? e.b : e.a;
    in_edge = out_edge;
  } while (!(node == top(0) && in_edge == start_edge));

  if (static_cast<int>(walk.size()) != 2 * total)
    throw error(errc::not_a_knot, "double twist closure has two components");

  auto dir = [](int port_in, double d[2]) {
    switch (port_in) {
      case NW: d[0] = 1; d[1] = -1; break;
      case SE: d[0] = -1; d[1] = 1; break;
      case NE: d[0] = -1; d[1] = -1; break;
      default: d[0] = 1; d[1] = 1; break;
    }
  };
  auto is_over = [&](const passage& p) {
    bool on_ne_sw = (p.port_in == NE || p.port_in == SW);
    return gen[static_cast<size_t>(p.crossing)] > 0 ? !on_ne_sw : on_ne_sw;
  };
  std::vector<double> over_dir(static_cast<size_t>(2 * total), 0.0);
  std::vector<double> under_dir(static_cast<size_t>(2 * total), 0.0);
  for (const passage& p : walk) {
    double d[2];
    dir(p.port_in, d);
    auto* slot = is_over(p) ? over_dir.data() : under_dir.data();
    slot[2 * p.crossing] = d[0];
    slot[2 * p.crossing + 1] = d[1];
  }
  std::vector<int> sign(static_cast<size_t>(total), 0);
  for (int c = 0; c < total; ++c) {
    double det = over_dir[static_cast<size_t>(2 * c)] * under_dir[static_cast<size_t>(2 * c + 1)] -
                 over_dir[static_cast<size_t>(2 * c + 1)] * under_dir[static_cast<size_t>(2 * c)];
    sign[static_cast<size_t>(c)] = det > 0 ? 1 : -1;
  }

  std::vector<endpoint> seq;
  std::vector<int> id(static_cast<size_t>(total), -1);
  std::vector<int> signs;
  for (const passage& p : walk) {
    if (id[static_cast<size_t>(p.crossing)] < 0) {
      id[static_cast<size_t>(p.crossing)] = static_cast<int>(signs.size());
      signs.push_back(sign[static_cast<size_t>(p.crossing)]);
    }
    seq.push_back(endpoint{id[static_cast<size_t>(p.crossing)], is_over(p) ? role::tail : role::head});
  }
  return gauss_diagram::from_sequences({std::move(seq)}, std::move(signs));
}

}  // namespace gausslink
