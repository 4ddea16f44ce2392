#include "gausslink/invariants.hpp"

#include <map>
#include <numeric>
#include <string>

#include "gausslink/arrowgen.hpp"
#include "gausslink/pairing.hpp"

namespace gausslink {

const arrow_polynomial& cached_conway_poly(int n, int cap_chords) {
  static std::map<int, arrow_polynomial> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_C(n, cap_chords)).first;
  return it->second;
}

const arrow_polynomial& cached_milnor_poly(int n, int cap_n) {
  static std::map<int, arrow_polynomial> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_Z(n, cap_n)).first;
  return it->second;
}

long long linking_number(const gauss_diagram& g, int i, int j) {
  if (i < 0 || i >= g.components() || j < 0 || j >= g.components())
    throw error(errc::component_range, "component index out of range");
  if (i == j) throw error(errc::duplicate_index, "linking number needs two components");
  long long lk = 0;
  for (int a = 0; a < g.arrow_count(); ++a)
    if (g.tail(a).comp == i && g.head(a).comp == j) lk += g.sign(a);
  return lk;
}

long long conway_c2n(const gauss_diagram& g, int n, int cap_chords) {
  if (g.components() != 1)
    throw error(errc::component_mismatch, "Conway coefficients need a one-component diagram");
  if (n < 0) throw error(errc::bad_params, "order must be nonnegative");
  if (n == 0) return 1;
  return pair_poly(cached_conway_poly(n, cap_chords), g);
}

namespace {

void check_milnor_indices(const gauss_diagram& g, const std::vector<int>& seq) {
  if (seq.size() < 2) throw error(errc::bad_params, "index sequence needs length >= 2");
  std::vector<char> seen(static_cast<size_t>(g.components()), 0);
  for (int c : seq) {
    if (c < 0 || c >= g.components())
      throw error(errc::component_range, "component index out of range");
    if (seen[static_cast<size_t>(c)]) throw error(errc::duplicate_index, "repeated component index");
    seen[static_cast<size_t>(c)] = 1;
  }
}

// Raw pairing value for the sequence (lead..., last): restrict to the listed
// components with `last` becoming the trunk, then pair with the tree
// polynomial on |seq| strings.
long long raw_mu(const gauss_diagram& g, const std::vector<int>& seq, int cap_n) {
  int n = static_cast<int>(seq.size());
  std::vector<int> comps;
  comps.reserve(seq.size());
  comps.push_back(seq.back());
  comps.insert(comps.end(), seq.begin(), seq.end() - 1);
  return pair_poly(cached_milnor_poly(n, cap_n), g.restrict_to(comps));
}

long long delta_rec(const gauss_diagram& g, const std::vector<int>& seq, int cap_n,
                    std::map<std::vector<int>, long long>& memo) {
  if (seq.size() == 2) return 0;
  auto it = memo.find(seq);
  if (it != memo.end()) return it->second;
  long long d = 0;
  int n = static_cast<int>(seq.size());
  // proper order-preserving subsequences of length >= 2
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits < 2 || bits == n) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(seq[static_cast<size_t>(i)]);
    long long raw = raw_mu(g, sub, cap_n);
    long long reduced = bracket_reduce(raw, delta_rec(g, sub, cap_n, memo));
    d = std::gcd(d, reduced);
  }
  memo.emplace(seq, d);
  return d;
}

}  // namespace

long long milnor_delta(const gauss_diagram& g, const std::vector<int>& seq, int cap_n) {
  check_milnor_indices(g, seq);
  if (static_cast<int>(seq.size()) > cap_n)
    throw error(errc::cap_exceeded, "index sequence length exceeds cap");
  std::map<std::vector<int>, long long> memo;
  return delta_rec(g, seq, cap_n, memo);
}

milnor_result milnor_mu(const gauss_diagram& g, const std::vector<int>& lead, int last,
                        int cap_n) {
  std::vector<int> seq = lead;
  seq.push_back(last);
  check_milnor_indices(g, seq);
  if (static_cast<int>(seq.size()) > cap_n)
    throw error(errc::cap_exceeded, "index sequence length exceeds cap");
  milnor_result r;
  r.raw = raw_mu(g, seq, cap_n);
  std::map<std::vector<int>, long long> memo;
  r.modulus = delta_rec(g, seq, cap_n, memo);
  r.reduced = bracket_reduce(r.raw, r.modulus);
  return r;
}

long long bracket_reduce(long long v, long long d) {
  if (d == 0) return v < 0 ? -v : v;
  if (d < 0) d = -d;
  long long r = ((v % d) + d) % d;
  return std::min(r, d - r);
}

}  // namespace gausslink
