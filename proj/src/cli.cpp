#include "gausslink/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gausslink/arrowgen.hpp"
#include "gausslink/bounds.hpp"
#include "gausslink/codec.hpp"
#include "gausslink/diagram.hpp"
#include "gausslink/geometry.hpp"
#include "gausslink/invariants.hpp"
#include "gausslink/pairing.hpp"

namespace gausslink {

const char* const tool_version = "1.0.0";

namespace {

struct cli_config {
  std::string gauss, polylink, poly_file, out;
  int conway = 0;
  int milnor = 0;
  int c2n = 0;
  long long samples = 1000;
  int grid = 512;
  std::uint64_t seed = 1;
  bool json = false;
  int cap_n = 6;
  int cap_chords = 8;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_comment_lines(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream kept;
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string::npos && line[a] == '#') continue;
    kept << line << "\n";
  }
  return kept.str();
}

gauss_diagram load_gauss(const std::string& path) {
  return parse_gauss_code(strip_comment_lines(read_file(path)));
}

// A --polylink value is a JSON file when one exists at that path; otherwise
// it names a builtin, optionally with parameters: "torus:p=2,q=4".
poly_link load_polylink(const std::string& value) {
  {
    std::ifstream probe(value, std::ios::binary);
    if (probe.good()) {
      std::ostringstream ss;
      ss << probe.rdbuf();
      return parse_poly_link(ss.str());
    }
  }
  std::string name = value;
  std::vector<std::string> params;
  if (size_t colon = value.find(':'); colon != std::string::npos) {
    name = value.substr(0, colon);
    std::string rest = value.substr(colon + 1);
    size_t start = 0;
    while (start < rest.size()) {
      size_t comma = rest.find(',', start);
      size_t len = (comma == std::string::npos ? rest.size() : comma) - start;
      if (len > 0) params.push_back(rest.substr(start, len));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return builtin_link(name, params);
}

std::string fnum(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<std::pair<std::string, std::string>> config_items(const cli_config& c) {
  std::vector<std::pair<std::string, std::string>> items;
  if (!c.gauss.empty()) items.emplace_back("gauss", c.gauss);
  if (!c.polylink.empty()) items.emplace_back("polylink", c.polylink);
  if (!c.poly_file.empty()) items.emplace_back("poly-file", c.poly_file);
  if (c.conway) items.emplace_back("conway", std::to_string(c.conway));
  if (c.milnor) items.emplace_back("milnor", std::to_string(c.milnor));
  if (c.c2n) items.emplace_back("c2n", std::to_string(c.c2n));
  items.emplace_back("samples", std::to_string(c.samples));
  items.emplace_back("grid", std::to_string(c.grid));
  items.emplace_back("seed", std::to_string(c.seed));
  items.emplace_back("cap-n", std::to_string(c.cap_n));
  items.emplace_back("cap-chords", std::to_string(c.cap_chords));
  return items;
}

void emit(const cli_config& c, const std::string& command, const std::string& text_body,
          const nlohmann::json& result, std::ostream& out) {
  std::string payload;
  if (c.json) {
    nlohmann::json j;
    j["tool"] = "gausslink";
    j["version"] = tool_version;
    j["command"] = command;
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : config_items(c)) cfg[k] = v;
    j["config"] = cfg;
    j["seed"] = c.seed;
    j["result"] = result;
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "# gausslink " << tool_version << "\n# command: " << command << "\n# config:";
    for (const auto& [k, v] : config_items(c)) os << ' ' << k << '=' << v;
    os << "\n# seed: " << c.seed << "\n";
    os << text_body;
    payload = os.str();
  }
  if (c.out.empty()) {
    out << payload;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw error(errc::io_error, "cannot write " + c.out);
    f << payload;
  }
}

nlohmann::json poly_json(const arrow_polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, term] : p)
    terms.push_back({{"coeff", term.coeff}, {"key", key}});
  return {{"count", p.size()}, {"terms", terms}};
}

int do_generate(const cli_config& c, std::ostream& out, std::ostream& err) {
  if ((c.conway > 0) == (c.milnor > 0)) {
    err << "usage: generate needs exactly one of --conway N or --milnor N\n";
    return 2;
  }
  const arrow_polynomial& p = c.conway > 0 ? cached_conway_poly(c.conway, c.cap_chords)
                                           : cached_milnor_poly(c.milnor, c.cap_n);
  std::ostringstream body;
  body << "# terms: " << p.size() << "\n" << p.dump();
  emit(c, "generate", body.str(), poly_json(p), out);
  return 0;
}

int do_pair(const cli_config& c, std::ostream& out) {
  arrow_polynomial p = arrow_polynomial::parse(read_file(c.poly_file));
  gauss_diagram g = load_gauss(c.gauss);
  long long v = pair_poly(p, g);
  std::ostringstream body;
  body << "pairing = " << v << "\n";
  emit(c, "pair", body.str(), {{"value", v}}, out);
  return 0;
}

int do_invariants(const cli_config& c, std::ostream& out) {
  gauss_diagram g = load_gauss(c.gauss);
  const int nc = g.components();
  std::ostringstream body;
  nlohmann::json result;
  body << "components: " << nc << "\narrows: " << g.arrow_count() << "\n";
  result["components"] = nc;
  result["arrows"] = g.arrow_count();

  if (c.c2n > 0) {
    long long v = conway_c2n(g, c.c2n, c.cap_chords);
    body << "c_" << 2 * c.c2n << " = " << v << "\n";
    result["c" + std::to_string(2 * c.c2n)] = v;
  }
  if (c.milnor > 0) {
    if (c.milnor < 2 || c.milnor > nc)
      throw error(errc::bad_params, "--milnor needs 2 <= n <= component count");
    std::vector<int> lead;
    std::string digits;
    for (int comp = 1; comp < c.milnor; ++comp) {
      lead.push_back(comp);
      digits += std::to_string(comp + 1);
    }
    milnor_result m = milnor_mu(g, lead, 0, c.cap_n);
    body << "mu(" << digits << ";1): raw=" << m.raw << " modulus=" << m.modulus
         << " bracket=" << m.reduced << "\n";
    result["milnor"] = {{"indices", digits + ";1"},
                        {"raw", m.raw},
                        {"modulus", m.modulus},
                        {"bracket", m.reduced}};
  }
  if (c.c2n == 0 && c.milnor == 0) {
    long long writhe = 0;
    for (int a = 0; a < g.arrow_count(); ++a) writhe += g.sign(a);
    body << "writhe: " << writhe << "\n";
    result["writhe"] = writhe;
    if (nc == 1) {
      long long v = conway_c2n(g, 1, c.cap_chords);
      body << "c_2 = " << v << "\n";
      result["c2"] = v;
    } else {
      nlohmann::json lks = nlohmann::json::array();
      for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j) {
          long long lk = linking_number(g, i, j);
          body << "lk(" << i + 1 << "," << j + 1 << ") = " << lk << "\n";
          lks.push_back({{"a", i + 1}, {"b", j + 1}, {"lk", lk}});
        }
      result["lk"] = lks;
    }
  }
  emit(c, "invariants", body.str(), result, out);
  return 0;
}

int do_geometry(const cli_config& c, bool with_samples, std::ostream& out) {
  poly_link link = load_polylink(c.polylink);
  link_metrics m = metrics(link);
  const int nc = (int)link.components.size();
  std::ostringstream body;
  nlohmann::json result;
  body << "name: " << link.name << "\ncomponents: " << nc << "\n";
  result["name"] = link.name;
  result["components"] = nc;
  for (int i = 0; i < nc; ++i) body << "length[" << i + 1 << "] = " << fnum(m.lengths[i]) << "\n";
  result["lengths"] = m.lengths;
  body << "total-length: " << fnum(m.total_length) << "\n"
       << "min-rad: " << fnum(m.min_rad) << "\n"
       << "pair-clearance: " << fnum(m.pair_clearance) << "\n"
       << "thickness: " << fnum(m.thickness) << "\n"
       << "rop: " << fnum(m.rop) << "\n";
  result["total-length"] = m.total_length;
  result["min-rad"] = m.min_rad;
  result["pair-clearance"] = m.pair_clearance;
  result["thickness"] = m.thickness;
  result["rop"] = m.rop;
  for (int i = 0; i < nc; ++i) body << "rop[" << i + 1 << "] = " << fnum(m.comp_rop[i]) << "\n";
  result["comp-rop"] = m.comp_rop;
  body << "ball-center: " << fnum(m.ball_center.x) << " " << fnum(m.ball_center.y) << " "
       << fnum(m.ball_center.z) << "\nball-radius: " << fnum(m.ball_radius) << "\n"
       << "tau: " << fnum(m.tau) << "\n";
  result["ball-center"] = {m.ball_center.x, m.ball_center.y, m.ball_center.z};
  result["ball-radius"] = m.ball_radius;
  result["tau"] = m.tau;

  nlohmann::json pairs = nlohmann::json::array();
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      pair_integral pi = gauss_pair_integral(link, i, j, c.grid);
      body << "lk-integral(" << i + 1 << "," << j + 1 << ") = " << fnum(pi.lk) << "\n"
           << "aov(" << i + 1 << "," << j + 1 << ") = " << fnum(pi.aov) << "\n";
      pairs.push_back({{"a", i + 1}, {"b", j + 1}, {"lk", pi.lk}, {"aov", pi.aov}});
    }
  result["pair-integrals"] = pairs;

  if (with_samples) {
    average_counts av = sample_average_counts(link, c.samples, c.seed);
    body << "samples: " << av.samples << "\nresampled: " << av.resampled << "\n"
         << "cr-mean: " << fnum(av.cr_mean) << "\ncr-sigma: " << fnum(av.cr_sigma) << "\n"
         << "ov-mean: " << fnum(av.ov_mean) << "\nov-sigma: " << fnum(av.ov_sigma) << "\n"
         << "cr-min: " << av.cr_min << "\nov-min: " << av.ov_min << "\n";
    result["averages"] = {{"samples", av.samples},   {"resampled", av.resampled},
                          {"cr-mean", av.cr_mean},   {"cr-sigma", av.cr_sigma},
                          {"ov-mean", av.ov_mean},   {"ov-sigma", av.ov_sigma},
                          {"cr-min", av.cr_min},     {"ov-min", av.ov_min}};
  }
  emit(c, "geometry", body.str(), result, out);
  return 0;
}

int do_bounds(const cli_config& c, std::ostream& out) {
  gauss_diagram g = load_gauss(c.gauss);
  const int nc = g.components();
  bound_report rep;
  if (nc == 1) {
    knot_inputs ki;
    ki.cr = (double)g.arrow_count();
    ki.c2n[1] = conway_c2n(g, 1, c.cap_chords);
    if (c.cap_chords >= 4 && g.arrow_count() <= 20) ki.c2n[2] = conway_c2n(g, 2, c.cap_chords);
    if (c.c2n > 2) ki.c2n[c.c2n] = conway_c2n(g, c.c2n, c.cap_chords);
    rep = knot_bounds(ki);
    rep.meta["cr"] = "diagram crossing count, an upper bound for the crossing number";
  } else {
    link_inputs li;
    li.n = nc;
    li.lk.assign(nc, std::vector<long long>(nc, 0));
    bool all_zero = true;
    for (int i = 0; i < nc; ++i)
      for (int j = 0; j < nc; ++j) {
        if (i == j) continue;
        li.lk[i][j] = linking_number(g, i, j);
        if (li.lk[i][j] != 0) all_zero = false;
      }
    if (nc <= c.cap_n) {
      std::vector<int> lead;
      for (int comp = 1; comp < nc; ++comp) lead.push_back(comp);
      milnor_result m = milnor_mu(g, lead, 0, c.cap_n);
      li.mu_bracket = m.reduced;
      li.brunnian = nc >= 3 && all_zero && m.reduced != 0;
    }
    rep = link_bounds(li);
  }
  rep.meta["diagram"] = c.gauss;
  emit(c, "bounds", rep.to_text(), nlohmann::json::parse(rep.to_json()), out);
  return 0;
}

int do_verify(const cli_config& c, std::ostream& out) {
  poly_link link = load_polylink(c.polylink);
  verify_options vo;
  vo.samples = c.samples;
  vo.seed = c.seed;
  vo.grid = c.grid;
  vo.cap_chords = c.cap_chords;
  vo.cap_n = c.cap_n;
  bound_report rep = verify_geometry(link, vo);
  emit(c, "verify", rep.to_text(), nlohmann::json::parse(rep.to_json()), out);
  return rep.all_pass() ? 0 : 1;
}

int do_examples(const cli_config& c, std::ostream& out) {
  static const char* body =
      "builtin links, for --polylink NAME or --polylink NAME:key=value,key=value\n"
      "  circle              r=1 n=360\n"
      "  hopf                n=360\n"
      "  borromean           n=360\n"
      "  torus               p=2 q=3 n=720\n"
      "  separated_circles   d=3 n=360\n"
      "gauss code files: components separated by '/', tokens O<label><sign> and\n"
      "U<label><sign>; '#' lines are comments.\n"
      "  5_2 knot:  O1+ U2+ O3+ U1+ O2+ U4+ O5+ U3+ O4+ U5+\n"
      "poly link files: {\"name\": \"...\", \"components\": [[[x,y,z], ...], ...]}\n"
      "sample commands:\n"
      "  gausslink invariants --gauss data/5_2.gauss --c2n 1\n"
      "  gausslink generate --milnor 3\n"
      "  gausslink geometry --polylink hopf --samples 500\n"
      "  gausslink bounds --gauss data/5_2.gauss\n"
      "  gausslink verify --polylink data/borromean.json --seed 7 --samples 1000\n";
  nlohmann::json result;
  result["builtins"] = {"circle", "hopf", "borromean", "torus", "separated_circles"};
  result["text"] = body;
  emit(c, "examples", body, result, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  cli_config cfg;
  CLI::App app{"Gauss diagram invariants and ropelength bound checks", "gausslink"};
  app.require_subcommand(1);

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--cap-n", cfg.cap_n, "tree polynomial string cap");
    sub->add_option("--cap-chords", cfg.cap_chords, "chord diagram size cap");
  };
  auto add_io = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "machine readable output");
    sub->add_option("--out", cfg.out, "write output to a file");
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Monte Carlo direction count")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grid", cfg.grid, "quadrature grid per component")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
  };

  CLI::App* gen = app.add_subcommand("generate", "emit a Conway or Milnor arrow polynomial");
  gen->add_option("--conway", cfg.conway, "order n of the Conway weight system for c_{2n}");
  gen->add_option("--milnor", cfg.milnor, "string count n of the Milnor tree polynomial");
  add_caps(gen);
  add_io(gen);

  CLI::App* pr = app.add_subcommand("pair", "pair a polynomial file with a Gauss diagram");
  pr->add_option("--poly-file", cfg.poly_file, "arrow polynomial file")->required();
  pr->add_option("--gauss", cfg.gauss, "Gauss code file")->required();
  add_io(pr);

  CLI::App* inv = app.add_subcommand("invariants", "invariants of a Gauss diagram");
  inv->add_option("--gauss", cfg.gauss, "Gauss code file")->required();
  inv->add_option("--c2n", cfg.c2n, "order n: report the Conway coefficient c_{2n}");
  inv->add_option("--milnor", cfg.milnor, "string count n: report mu(2..n;1)");
  add_caps(inv);
  add_io(inv);

  CLI::App* geo = app.add_subcommand("geometry", "metrics of a polygonal link");
  geo->add_option("--polylink", cfg.polylink, "poly link file or builtin name")->required();
  add_sampling(geo);
  add_io(geo);

  CLI::App* bnd = app.add_subcommand("bounds", "bound catalog from diagram invariants");
  bnd->add_option("--gauss", cfg.gauss, "Gauss code file")->required();
  bnd->add_option("--c2n", cfg.c2n, "extra Conway order to include");
  add_caps(bnd);
  add_io(bnd);

  CLI::App* ver = app.add_subcommand("verify", "measure a polygonal link and check all bounds");
  ver->add_option("--polylink", cfg.polylink, "poly link file or builtin name")->required();
  add_sampling(ver);
  add_caps(ver);
  add_io(ver);

  CLI::App* ex = app.add_subcommand("examples", "list builtin links and sample commands");
  add_io(ex);

  std::vector<const char*> argv;
  argv.push_back("gausslink");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) return do_generate(cfg, out, err);
    if (*pr) return do_pair(cfg, out);
    if (*inv) return do_invariants(cfg, out);
    if (*geo) return do_geometry(cfg, geo->count("--samples") > 0, out);
    if (*bnd) return do_bounds(cfg, out);
    if (*ver) return do_verify(cfg, out);
    if (*ex) return do_examples(cfg, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage: no subcommand selected\n";
  return 2;
}

}  // namespace gausslink
