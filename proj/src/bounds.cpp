#include "gausslink/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "gausslink/invariants.hpp"

namespace gausslink {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTol = 1e-9;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double binom(double n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r *= (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "-";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bound_entry checked(std::string id, std::string source, double lhs, double rhs,
                    std::string note, std::map<std::string, double> inputs,
                    double tol = kTol) {
  bound_entry e;
  e.id = std::move(id);
  e.source = std::move(source);
  e.lhs = lhs;
  e.rhs = rhs;
  e.margin = lhs - rhs;
  e.tolerance = tol;
  e.status = e.margin >= -tol ? "pass" : "fail";
  e.note = std::move(note);
  if (e.status == "pass" && rhs <= tol)
    e.note = e.note.empty() ? "trivially weak" : e.note + "; trivially weak";
  e.inputs = std::move(inputs);
  return e;
}

bound_entry na(std::string id, std::string source, std::string note,
               std::map<std::string, double> inputs = {}, double rhs = kNan) {
  bound_entry e;
  e.id = std::move(id);
  e.source = std::move(source);
  e.lhs = kNan;
  e.rhs = rhs;
  e.margin = kNan;
  e.tolerance = kTol;
  e.status = "not-applicable";
  e.note = std::move(note);
  e.inputs = std::move(inputs);
  return e;
}

}  // namespace

namespace constants {

double d0() { return 6.0 * (kPi + std::sqrt(2.0)) - 10.0; }

double c_n(int n) {
  if (n < 2) throw error(errc::bad_params, "c_n needs n >= 2");
  const double N = binom(n, 2);
  return std::pow(std::pow(N, n - 1) / binom(N, n - 1), 1.0 / (n - 1));
}

double c_tilde_n(int n) {
  if (n < 2) throw error(errc::bad_params, "c_tilde_n needs n >= 2");
  const double N = binom(n, 2);
  return std::pow(n * std::pow(N, n - 1) / binom(N, n - 1), 1.0 / (n - 1));
}

}  // namespace constants

bool bound_report::all_pass() const {
  for (const auto& e : entries)
    if (e.status == "fail") return false;
  return true;
}

std::string bound_report::to_json() const {
  nlohmann::json j;
  j["meta"] = meta;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["id"] = e.id;
    je["source"] = e.source;
    je["lhs"] = e.lhs;
    je["rhs"] = e.rhs;
    je["margin"] = e.margin;
    je["tolerance"] = e.tolerance;
    je["status"] = e.status;
    je["note"] = e.note;
    je["inputs"] = e.inputs;
    j["entries"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

std::string bound_report::to_text() const {
  std::ostringstream os;
  for (const auto& kv : meta) os << "# " << kv.first << ": " << kv.second << "\n";
  for (const auto& e : entries) {
    const char* tag = e.status == "pass"   ? "pass"
                      : e.status == "fail" ? "FAIL"
                                           : "n/a ";
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-26s lhs=%-12s rhs=%-12s margin=%-12s", tag,
                  e.id.c_str(), fmt(e.lhs).c_str(), fmt(e.rhs).c_str(), fmt(e.margin).c_str());
    os << line << "(" << e.source << ")";
    if (!e.note.empty()) os << "  " << e.note;
    os << "\n";
  }
  return os.str();
}

double tau_from_rop(double rop) {
  if (!(rop > 0)) throw error(errc::non_positive, "ropelength must be positive");
  return std::cbrt(11.0 / rop);
}

bound_report knot_bounds(const knot_inputs& in) {
  bound_report r;
  bool informative = false;
  auto add = [&](bound_entry e) {
    if (e.status != "not-applicable" || !std::isnan(e.rhs)) informative = true;
    r.entries.push_back(std::move(e));
  };
  const double d0 = constants::d0();

  if (in.ln && in.cr) {
    add(checked("buck-simon-cr", "buck-simon", *in.ln,
                std::pow(4.0 * kPi / 11.0 * *in.cr, 0.75), "",
                {{"ln", *in.ln}, {"cr", *in.cr}}));
    add(checked("buck-simon-cr-2", "buck-simon", *in.ln, 4.0 * std::sqrt(kPi * *in.cr), "",
                {{"ln", *in.ln}, {"cr", *in.cr}}));
    if (*in.cr >= 3) {
      add(checked("diao", "diao", *in.ln,
                  0.5 * (d0 + std::sqrt(d0 * d0 + 64.0 * kPi * *in.cr)), "",
                  {{"ln", *in.ln}, {"cr", *in.cr}}));
    } else {
      add(na("diao", "diao", "needs a diagram with at least 3 crossings",
             {{"cr", *in.cr}}));
    }
  } else if (in.cr) {
    const std::map<std::string, double> ins{{"cr", *in.cr}};
    const char* lower = "rhs is a ropelength lower bound; no ln supplied";
    add(na("buck-simon-cr", "buck-simon", lower, ins,
           std::pow(4.0 * kPi / 11.0 * *in.cr, 0.75)));
    add(na("buck-simon-cr-2", "buck-simon", lower, ins, 4.0 * std::sqrt(kPi * *in.cr)));
    if (*in.cr >= 3) {
      add(na("diao", "diao", lower, ins,
             0.5 * (d0 + std::sqrt(d0 * d0 + 64.0 * kPi * *in.cr))));
    } else {
      r.entries.push_back(na("diao", "diao", "needs a diagram with at least 3 crossings", ins));
    }
  } else {
    r.entries.push_back(na("buck-simon-cr", "buck-simon", "needs ln and cr"));
    r.entries.push_back(na("buck-simon-cr-2", "buck-simon", "needs ln and cr"));
    r.entries.push_back(na("diao", "diao", "needs ln and cr"));
  }

  if (in.ln && in.acr) {
    add(checked("buck-simon-acr", "buck-simon", std::pow(*in.ln, 4.0 / 3.0),
                4.0 * kPi / 11.0 * *in.acr, "lhs is ln^(4/3)",
                {{"ln", *in.ln}, {"acr", *in.acr}}));
    add(checked("buck-simon-acr-2", "buck-simon", *in.ln * *in.ln, 16.0 * kPi * *in.acr,
                "lhs is ln^2", {{"ln", *in.ln}, {"acr", *in.acr}}));
  } else {
    r.entries.push_back(na("buck-simon-acr", "buck-simon", "needs ln and acr"));
    r.entries.push_back(na("buck-simon-acr-2", "buck-simon", "needs ln and acr"));
  }

  const auto c2_it = in.c2n.find(1);
  if (in.cr && c2_it != in.c2n.end()) {
    const double c2 = std::llabs(c2_it->second);
    add(checked("lin-wang", "lin-wang", 0.25 * *in.cr * (*in.cr - 1) + 1.0 / 24.0, c2,
                "lhs is cr(cr-1)/4 + 1/24", {{"cr", *in.cr}, {"c2", (double)c2_it->second}}));
    add(checked("polyak-viro", "polyak-viro", *in.cr * *in.cr / 8.0, c2, "lhs is cr^2/8",
                {{"cr", *in.cr}, {"c2", (double)c2_it->second}}));
  } else {
    r.entries.push_back(na("lin-wang", "lin-wang", "needs cr and c2"));
    r.entries.push_back(na("polyak-viro", "polyak-viro", "needs cr and c2"));
  }

  if (in.cr && in.v3) {
    add(checked("v3-crossing-bound", "lin-wang",
                0.25 * *in.cr * (*in.cr - 1) * (*in.cr - 2), (double)std::llabs(*in.v3),
                "lhs is cr(cr-1)(cr-2)/4", {{"cr", *in.cr}, {"v3", (double)*in.v3}}));
  } else {
    r.entries.push_back(na("v3-crossing-bound", "lin-wang", "needs cr and v3"));
  }

  for (const auto& [order, coeff] : in.c2n) {
    const double mag = (double)std::llabs(coeff);
    const double cr_rhs = std::pow(std::pow(2.0, order + 1) * factorial(order) * mag,
                                   1.0 / (2.0 * order));
    std::map<std::string, double> ins{{"n", (double)order}, {"c2n", (double)coeff}};
    if (in.cr) {
      ins["cr"] = *in.cr;
      add(checked("conway-crossing-bound", "conway-crossing-bound", *in.cr, cr_rhs, "", ins));
    } else {
      add(na("conway-crossing-bound", "conway-crossing-bound",
             "rhs is a crossing-number lower bound; no crossing number supplied", ins,
             cr_rhs));
    }
    if (!in.ln) {
      if (coeff == 0) {
        r.entries.push_back(na("conway-rop-bound", "conway-crossing-bound",
                               "vanishing coefficient gives no knotting certificate", ins));
      } else {
        const double inner =
            64.0 * kPi * std::sqrt(2.0 * order / 3.0) * std::pow(mag, 1.0 / (2.0 * order));
        add(na("conway-rop-bound", "conway-crossing-bound",
               "rhs is a ropelength lower bound; no ln supplied", ins,
               0.5 * (d0 + std::sqrt(d0 * d0 + inner))));
      }
    } else if (coeff == 0) {
      r.entries.push_back(na("conway-rop-bound", "conway-crossing-bound",
                             "vanishing coefficient gives no knotting certificate", ins));
    } else {
      const double inner =
          64.0 * kPi * std::sqrt(2.0 * order / 3.0) * std::pow(mag, 1.0 / (2.0 * order));
      ins["ln"] = *in.ln;
      add(checked("conway-rop-bound", "conway-crossing-bound", *in.ln,
                  0.5 * (d0 + std::sqrt(d0 * d0 + inner)), "", ins));
    }
  }

  if (in.ln && in.ac) {
    add(checked("freedman-he-ac", "freedman-he", *in.ln,
                2.0 * kPi + 2.0 * kPi * std::sqrt(*in.ac),
                "asymptotic crossing number is user-asserted",
                {{"ln", *in.ln}, {"ac", *in.ac}}));
  } else {
    r.entries.push_back(na("freedman-he-ac", "freedman-he", "needs ln and ac"));
  }
  if (in.ln && in.genus) {
    if (*in.genus >= 1) {
      add(checked("freedman-he-genus", "freedman-he", *in.ln,
                  2.0 * kPi + 2.0 * kPi * std::sqrt(2.0 * *in.genus - 1),
                  "genus is user-asserted", {{"ln", *in.ln}, {"genus", *in.genus}}));
    } else {
      r.entries.push_back(
          na("freedman-he-genus", "freedman-he", "needs genus >= 1", {{"genus", *in.genus}}));
    }
  } else {
    r.entries.push_back(na("freedman-he-genus", "freedman-he", "needs ln and genus"));
  }

  if (!informative)
    throw error(errc::no_applicable_bounds, "no bound has enough inputs");
  return r;
}

bound_report link_bounds(const link_inputs& in) {
  if (in.n < 2) throw error(errc::bad_params, "link bounds need at least 2 components");
  const int n = in.n;
  if (!in.lk.empty()) {
    if ((int)in.lk.size() != n) throw error(errc::bad_params, "linking matrix must be n x n");
    for (const auto& row : in.lk)
      if ((int)row.size() != n) throw error(errc::bad_params, "linking matrix must be n x n");
  }
  if (!in.comp_rop.empty() && (int)in.comp_rop.size() != n)
    throw error(errc::bad_params, "per-component rop list must have n entries");

  bound_report r;
  bool informative = false;
  auto add = [&](bound_entry e) {
    if (e.status != "not-applicable" || !std::isnan(e.rhs)) informative = true;
    r.entries.push_back(std::move(e));
  };

  double lk_total = 0;
  std::vector<double> lk_row(n, 0.0);
  if (!in.lk.empty()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        lk_row[i] += std::llabs(in.lk[i][j]);
        if (i < j) lk_total += std::llabs(in.lk[i][j]);
      }
  }

  if (!in.comp_rop.empty() && !in.lk.empty()) {
    for (int i = 0; i < n; ++i) {
      add(checked("cks-component-lk", "cantarella-kusner-sullivan", in.comp_rop[i],
                  2.0 * kPi + 2.0 * kPi * std::sqrt(lk_row[i]), "",
                  {{"component", (double)(i + 1)},
                   {"comp-rop", in.comp_rop[i]},
                   {"lk-total", lk_row[i]}}));
    }
  } else {
    r.entries.push_back(na("cks-component-lk", "cantarella-kusner-sullivan",
                           "needs per-component rop and the linking matrix"));
  }

  for (int i = 0; i < n; ++i) {
    const bool have_rop = !in.comp_rop.empty();
    if (have_rop && i < (int)in.ac.size() && std::isfinite(in.ac[i])) {
      add(checked("freedman-he-component-ac", "freedman-he", in.comp_rop[i],
                  2.0 * kPi + 2.0 * kPi * std::sqrt(in.ac[i]),
                  "asymptotic crossing number is user-asserted",
                  {{"component", (double)(i + 1)}, {"ac", in.ac[i]}}));
    }
    if (have_rop && i < (int)in.genus.size() && std::isfinite(in.genus[i]) &&
        in.genus[i] >= 1) {
      add(checked("freedman-he-component-genus", "freedman-he", in.comp_rop[i],
                  2.0 * kPi + 2.0 * kPi * std::sqrt(2.0 * in.genus[i] - 1),
                  "genus is user-asserted",
                  {{"component", (double)(i + 1)}, {"genus", in.genus[i]}}));
    }
  }

  if (in.rop && !in.lk.empty()) {
    add(checked("lk-rop-34", "milnor-rop-bound", *in.rop,
                std::pow(3.0 * lk_total, 0.75) / std::sqrt((double)n - 1), "",
                {{"rop", *in.rop}, {"lk-sum", lk_total}}));
    add(checked("lk-rop-sqrt", "cantarella-kusner-sullivan", *in.rop,
                n * std::sqrt(32.0 * kPi) / std::sqrt((double)n * n - 1) *
                    std::sqrt(lk_total),
                "", {{"rop", *in.rop}, {"lk-sum", lk_total}}));
  } else if (!in.lk.empty()) {
    const std::map<std::string, double> ins{{"lk-sum", lk_total}};
    const char* lower = "rhs is a ropelength lower bound; no rop supplied";
    add(na("lk-rop-34", "milnor-rop-bound", lower, ins,
           std::pow(3.0 * lk_total, 0.75) / std::sqrt((double)n - 1)));
    add(na("lk-rop-sqrt", "cantarella-kusner-sullivan", lower, ins,
           n * std::sqrt(32.0 * kPi) / std::sqrt((double)n * n - 1) * std::sqrt(lk_total)));
  } else {
    r.entries.push_back(
        na("lk-rop-34", "milnor-rop-bound", "needs rop and the linking matrix"));
    r.entries.push_back(na("lk-rop-sqrt", "cantarella-kusner-sullivan",
                           "needs rop and the linking matrix"));
  }

  if (in.rop && in.pcr) {
    add(checked("pcr-rop-34", "milnor-rop-bound", *in.rop,
                std::pow(1.5 * *in.pcr, 0.75) / std::sqrt((double)n - 1), "",
                {{"rop", *in.rop}, {"pcr", *in.pcr}}));
    add(checked("pcr-rop-sqrt", "cantarella-kusner-sullivan", *in.rop,
                n * std::sqrt(16.0 * kPi) / std::sqrt((double)n * n - 1) *
                    std::sqrt(*in.pcr),
                "", {{"rop", *in.rop}, {"pcr", *in.pcr}}));
  } else {
    r.entries.push_back(na("pcr-rop-34", "milnor-rop-bound", "needs rop and pcr"));
    r.entries.push_back(na("pcr-rop-sqrt", "cantarella-kusner-sullivan", "needs rop and pcr"));
  }

  const double bracket =
      in.mu_bracket ? (double)std::llabs(*in.mu_bracket) : kNan;
  const double mu_pow =
      in.mu_bracket ? std::pow(bracket, 1.0 / (n - 1)) : kNan;

  if (in.rop && in.mu_bracket) {
    add(checked("milnor-rop-bound", "milnor-rop-bound", *in.rop,
                std::pow((double)n, 0.25) * std::pow(mu_pow, 0.75), "",
                {{"rop", *in.rop}, {"mu-bracket", bracket}}));
    add(checked("milnor-rop-exact", "milnor-rop-bound", std::pow(*in.rop, 4.0 / 3.0),
                10.0 * std::cbrt((double)n) * constants::c_n(n) / (3.0 * (n - 1)) * mu_pow,
                "lhs is rop^(4/3)", {{"rop", *in.rop}, {"mu-bracket", bracket}}));
  } else if (in.mu_bracket) {
    const std::map<std::string, double> ins{{"mu-bracket", bracket}};
    add(na("milnor-rop-bound", "milnor-rop-bound",
           "rhs is a ropelength lower bound; no rop supplied", ins,
           std::pow((double)n, 0.25) * std::pow(mu_pow, 0.75)));
    add(na("milnor-rop-exact", "milnor-rop-bound",
           "rhs bounds rop^(4/3) from below; no rop supplied", ins,
           10.0 * std::cbrt((double)n) * constants::c_n(n) / (3.0 * (n - 1)) * mu_pow));
  } else {
    r.entries.push_back(
        na("milnor-rop-bound", "milnor-rop-bound", "needs rop and the top Milnor bracket"));
    r.entries.push_back(
        na("milnor-rop-exact", "milnor-rop-bound", "needs rop and the top Milnor bracket"));
  }

  if (in.pcr && in.mu_bracket) {
    add(checked("milnor-pairwise-crossing", "milnor-rop-bound", *in.pcr,
                constants::c_n(n) * mu_pow, "per-projection refinement",
                {{"pcr", *in.pcr}, {"mu-bracket", bracket}}));
    add(checked("milnor-crossing-bound", "milnor-rop-bound", *in.pcr,
                (n - 1) / 3.0 * mu_pow,
                "crossing number checked via pcr, which it dominates",
                {{"pcr", *in.pcr}, {"mu-bracket", bracket}}));
  } else if (in.mu_bracket) {
    const std::map<std::string, double> ins{{"mu-bracket", bracket}};
    const char* lower = "rhs is a pairwise-crossing lower bound; no pcr supplied";
    add(na("milnor-pairwise-crossing", "milnor-rop-bound", lower, ins,
           constants::c_n(n) * mu_pow));
    add(na("milnor-crossing-bound", "milnor-rop-bound", lower, ins, (n - 1) / 3.0 * mu_pow));
  } else {
    r.entries.push_back(na("milnor-pairwise-crossing", "milnor-rop-bound",
                           "needs pcr and the top Milnor bracket"));
    r.entries.push_back(na("milnor-crossing-bound", "milnor-rop-bound",
                           "needs pcr and the top Milnor bracket"));
  }

  if (in.brunnian && in.rop && in.mu_bracket) {
    const double ct = constants::c_tilde_n(n);
    add(checked("brunnian-rop-bound", "brunnian-rop-bound", std::pow(*in.rop, 4.0 / 3.0),
                10.0 * std::cbrt((double)n) * ct / (3.0 * (n - 1)) * mu_pow,
                "lhs is rop^(4/3)", {{"rop", *in.rop}, {"mu-bracket", bracket}}));
    add(checked("brunnian-rop-bound-2", "brunnian-rop-bound", *in.rop * *in.rop,
                64.0 * kPi * ct * (double)n * n / ((double)n * n - 1) * mu_pow,
                "lhs is rop^2", {{"rop", *in.rop}, {"mu-bracket", bracket}}));
    if (n == 3) {
      add(checked("brunnian-rop-mu123", "brunnian-rop-bound", *in.rop,
                  std::pow(5.0 * std::cbrt(3.0) * std::sqrt(bracket), 0.75), "",
                  {{"rop", *in.rop}, {"mu-bracket", bracket}}));
      add(checked("brunnian-rop-mu123-2", "brunnian-rop-bound", *in.rop,
                  6.0 * std::sqrt(6.0 * kPi) * std::pow(bracket, 0.25), "",
                  {{"rop", *in.rop}, {"mu-bracket", bracket}}));
    }
  } else if (in.brunnian && in.mu_bracket) {
    const std::map<std::string, double> ins{{"mu-bracket", bracket}};
    add(na("brunnian-rop-bound", "brunnian-rop-bound",
           "rhs bounds rop^(4/3) from below; no rop supplied", ins,
           10.0 * std::cbrt((double)n) * constants::c_tilde_n(n) / (3.0 * (n - 1)) * mu_pow));
    if (n == 3) {
      add(na("brunnian-rop-mu123-2", "brunnian-rop-bound",
             "rhs is a ropelength lower bound; no rop supplied", ins,
             6.0 * std::sqrt(6.0 * kPi) * std::pow(bracket, 0.25)));
    }
  } else {
    r.entries.push_back(na("brunnian-rop-bound", "brunnian-rop-bound",
                           "needs the Brunnian flag, rop and the top Milnor bracket"));
  }

  if (!informative)
    throw error(errc::no_applicable_bounds, "no bound has enough inputs");
  return r;
}

bound_report verify_geometry(const poly_link& link, const verify_options& options) {
  const link_metrics m = metrics(link);
  const int n = (int)link.components.size();
  const average_counts av = sample_average_counts(link, options.samples, options.seed);
  const projection_result pr = project_generic(link, options.seed);
  const gauss_diagram& g = pr.diagram;

  // Measured left-hand sides get a 2% allowance for the polygonal thickness
  // estimate; raw values are recorded in the report metadata.
  const double slack = 1.02;
  const std::string slack_note = "lhs includes 2% measurement allowance";

  bound_report rep;
  if (n == 1) {
    knot_inputs ki;
    ki.ln = m.rop * slack;
    ki.c2n[1] = conway_c2n(g, 1, options.cap_chords);
    if (options.cap_chords >= 4 && g.arrow_count() <= 20)
      ki.c2n[2] = conway_c2n(g, 2, options.cap_chords);
    rep = knot_bounds(ki);
    rep.entries.push_back(na("link-family", "cantarella-kusner-sullivan",
                             "single component: linking-based bounds need a link"));
  } else {
    link_inputs li;
    li.n = n;
    li.rop = m.rop * slack;
    for (double v : m.comp_rop) li.comp_rop.push_back(v * slack);
    li.lk.assign(n, std::vector<long long>(n, 0));
    bool all_lk_zero = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        li.lk[i][j] = linking_number(g, i, j);
        if (li.lk[i][j] != 0) all_lk_zero = false;
      }
    if (n <= options.cap_n) {
      std::vector<int> lead;
      for (int c = 1; c < n; ++c) lead.push_back(c);
      const milnor_result mu = milnor_mu(g, lead, 0, options.cap_n);
      li.mu_bracket = mu.reduced;
      li.brunnian = n >= 3 && all_lk_zero && mu.reduced != 0;
    }
    rep = link_bounds(li);

    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const pair_integral pi = gauss_pair_integral(link, i, j, options.grid);
        const double li_len = m.comp_rop[i], lj_len = m.comp_rop[j];
        const double mixed = std::min(li_len * std::cbrt(lj_len), lj_len * std::cbrt(li_len));
        std::map<std::string, double> ins{{"component-a", (double)(i + 1)},
                                          {"component-b", (double)(j + 1)},
                                          {"aov", pi.aov}};
        rep.entries.push_back(checked("aov-length-bound", "buck-simon", mixed * slack,
                                      5.0 / 3.0 * pi.aov, "", ins));
        rep.entries.push_back(checked("aov-length-bound-2", "cantarella-kusner-sullivan",
                                      li_len * lj_len * slack * slack, 16.0 * kPi * pi.aov,
                                      "lhs is the length product", ins));
      }
    rep.entries.push_back(na("knot-family", "conway-crossing-bound",
                             "Conway coefficient bounds apply to knots"));
  }

  for (auto& e : rep.entries) {
    if (e.status == "not-applicable") continue;
    e.note = e.note.empty() ? slack_note : e.note + "; " + slack_note;
  }

  char buf[64];
  auto put = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%.9g", v);
    rep.meta[key] = buf;
  };
  rep.meta["link"] = link.name;
  rep.meta["components"] = std::to_string(n);
  rep.meta["samples"] = std::to_string(av.samples);
  rep.meta["resampled"] = std::to_string(av.resampled);
  rep.meta["seed"] = std::to_string(options.seed);
  rep.meta["grid"] = std::to_string(options.grid);
  rep.meta["normalization"] = "unit thickness; lengths in tube-radius units";
  rep.meta["slack"] = "2% on measured left-hand sides";
  put("rop", m.rop);
  put("thickness", m.thickness);
  put("tau", m.tau);
  put("cr-mean", av.cr_mean);
  put("cr-sigma", av.cr_sigma);
  put("ov-mean", av.ov_mean);
  put("ov-sigma", av.ov_sigma);
  put("cr-min", (double)av.cr_min);
  put("ov-min", (double)av.ov_min);
  return rep;
}

}  // namespace gausslink
