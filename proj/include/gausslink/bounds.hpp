#pragma once

// Catalog of ropelength / crossing-number lower bounds and the geometry
// verifier that assembles them into pass/fail reports.
//
// Every entry states an inequality LHS >= RHS with margin = LHS - RHS.  An
// entry passes when margin >= -tolerance.  Bounds with missing inputs are
// still emitted as not-applicable rows so a report is a complete audit
// trail.  All ropelength quantities are unit-thickness normalized: Ln means
// length measured in units of the tube radius, identical to rop.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gausslink/geometry.hpp"

namespace gausslink {

namespace constants {

// d0 from the quadratic crossing bound; the cited closed form 10 - 6(pi +
// sqrt 2) is negative, so the positive value matching the stated 17.334 is
// used.
double d0();

// c_n = (N^{n-1} / C(N, n-1))^{1/(n-1)} with N = C(n, 2); satisfies
// c_n >= (n-1)/3.
double c_n(int n);

// Brunnian variant: (n N^{n-1} / C(N, n-1))^{1/(n-1)}; c~_3 = 3 exactly.
double c_tilde_n(int n);

}  // namespace constants

struct bound_entry {
  std::string id;       // stable bound identifier
  std::string source;   // literature anchor
  double lhs = 0, rhs = 0, margin = 0;
  double tolerance = 0;
  std::string status;   // "pass" | "fail" | "not-applicable"
  std::string note;
  std::map<std::string, double> inputs;
};

struct bound_report {
  std::vector<bound_entry> entries;
  std::map<std::string, std::string> meta;

  bool all_pass() const;  // no entry with status "fail"
  std::string to_json() const;
  std::string to_text() const;
};

struct knot_inputs {
  std::optional<double> ln;     // unit-thickness length (= rop)
  std::optional<double> cr;     // crossing number, or an upper estimate
  std::optional<double> acr;    // average crossing number
  std::optional<double> ac;     // asymptotic crossing number (user-asserted)
  std::optional<double> genus;  // Seifert genus (user-asserted)
  std::optional<long long> v3;
  std::map<int, long long> c2n;  // n -> order-2n Conway coefficient
};

bound_report knot_bounds(const knot_inputs& in);

struct link_inputs {
  int n = 0;
  std::optional<double> rop;
  std::vector<double> comp_rop;                // per-component rop; may be empty
  std::vector<std::vector<long long>> lk;      // signed linking matrix (n x n)
  std::optional<double> pcr;                   // pairwise crossing number
  std::optional<long long> mu_bracket;         // top Milnor bracket value
  bool brunnian = false;
  std::vector<double> ac;     // per-component; NaN marks absent
  std::vector<double> genus;
};

bound_report link_bounds(const link_inputs& in);

// tau(L) <= (11 / rop)^{1/3}.
double tau_from_rop(double rop);

struct verify_options {
  long long samples = 1000;   // Monte Carlo directions for crossing averages
  std::uint64_t seed = 1;
  int grid = 512;             // quadrature resolution for pair integrals
  int cap_chords = 8;
  int cap_n = 6;
};

// End-to-end check: measures the geometry, projects a diagram, computes the
// invariants the diagram supports, and emits the full bound catalog with
// measured rop / per-component rop on the left-hand sides.  Invariant-free
// bounds (needing a crossing number or user-asserted quantities) appear as
// not-applicable rows.  Measured LHS entries carry a 2% slack for the
// polygonal thickness estimate.
bound_report verify_geometry(const poly_link& link, const verify_options& options = {});

}  // namespace gausslink
