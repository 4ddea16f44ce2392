#include "gausslink/arrowgen.hpp"

#include <map>

namespace gausslink {

namespace {

void enumerate_rec(std::vector<int>& partner, std::vector<chord_diagram>& out) {
  int n = static_cast<int>(partner.size());
  int first = -1;
  for (int i = 0; i < n; ++i)
    if (partner[static_cast<size_t>(i)] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(chord_diagram{partner});
    return;
  }
  for (int j = first + 1; j < n; ++j) {
    if (partner[static_cast<size_t>(j)] >= 0) continue;
    partner[static_cast<size_t>(first)] = j;
    partner[static_cast<size_t>(j)] = first;
    enumerate_rec(partner, out);
    partner[static_cast<size_t>(first)] = -1;
    partner[static_cast<size_t>(j)] = -1;
  }
}

}  // namespace

std::vector<chord_diagram> enumerate_chord_diagrams(int m, int cap_chords) {
  if (m < 0) throw error(errc::bad_params, "chord count must be nonnegative");
  if (m > cap_chords)
    throw error(errc::cap_exceeded, "chord count " + std::to_string(m) + " exceeds cap " +
                                        std::to_string(cap_chords));
  std::vector<int> partner(static_cast<size_t>(2 * m), -1);
  std::vector<chord_diagram> out;
  enumerate_rec(partner, out);
  return out;
}

int doubled_components(const chord_diagram& cd) {
  int n = static_cast<int>(cd.partner.size());
  if (n == 0) return 1;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int orbits = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++orbits;
    int i = s;
    while (!seen[static_cast<size_t>(i)]) {
      seen[static_cast<size_t>(i)] = 1;
      i = (cd.partner[static_cast<size_t>(i)] + 1) % n;
    }
  }
  return orbits;
}

arrow_pattern ascending_arrows(const chord_diagram& cd) {
  if (doubled_components(cd) != 1)
    throw error(errc::not_one_component, "doubled curve is not connected");
  int n = static_cast<int>(cd.partner.size());
  // arrival order of endpoint positions along the doubled curve
  std::vector<int> arrival(static_cast<size_t>(n), -1);
  int i = 0;
  for (int step = 0; step < n; ++step) {
    arrival[static_cast<size_t>(i)] = step;
    i = (cd.partner[static_cast<size_t>(i)] + 1) % n;
  }
  // chord ids by smaller endpoint; tail = endpoint reached first
  std::vector<int> chord_id(static_cast<size_t>(n), -1);
  int next = 0;
  std::vector<endpoint> seq;
  seq.reserve(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    if (chord_id[static_cast<size_t>(p)] < 0) {
      chord_id[static_cast<size_t>(p)] = next;
      chord_id[static_cast<size_t>(cd.partner[static_cast<size_t>(p)])] = next;
      ++next;
    }
    bool is_tail = arrival[static_cast<size_t>(p)] <
                   arrival[static_cast<size_t>(cd.partner[static_cast<size_t>(p)])];
    seq.push_back(endpoint{chord_id[static_cast<size_t>(p)], is_tail ? role::tail : role::head});
  }
  return arrow_pattern::from_sequences(true, {std::move(seq)});
}

arrow_polynomial build_C(int n, int cap_chords) {
  if (n < 0) throw error(errc::bad_params, "order must be nonnegative");
  if (2 * n > cap_chords)
    throw error(errc::cap_exceeded, "order 2n = " + std::to_string(2 * n) + " exceeds cap " +
                                        std::to_string(cap_chords));
  arrow_polynomial poly;
  for (const chord_diagram& cd : enumerate_chord_diagrams(2 * n, cap_chords))
    if (doubled_components(cd) == 1) poly.add(ascending_arrows(cd), 1);
  return poly;
}

arrow_pattern stack(const arrow_pattern& p, int s, elementary_tree t) {
  if (p.is_loop()) throw error(errc::bad_string, "stacking needs a string carrier");
  if (s < 0 || s >= p.strings()) throw error(errc::index_range, "target string out of range");
  if (t == elementary_tree::ebar && s == 0)
    throw error(errc::bad_params, "right-hung tree cannot target the trunk");

  int arrows = p.arrow_count();
  std::vector<std::vector<endpoint>> seqs;
  seqs.reserve(static_cast<size_t>(p.strings()) + 1);
  for (int i = 0; i < p.strings(); ++i) seqs.push_back(p.sequence(i));

  // new string position: left-adjacent for e (trunk target included: the new
  // string becomes string 1), right-adjacent for ebar
  int new_pos = (t == elementary_tree::e) ? std::max(s, 1) : s + 1;
  int target = (t == elementary_tree::e && s > 0) ? s + 1 : s;
  seqs.insert(seqs.begin() + new_pos, {endpoint{arrows, role::tail}});

  std::vector<endpoint>& tgt = seqs[static_cast<size_t>(target)];
  if (s == 0) {
    tgt.insert(tgt.begin(), endpoint{arrows, role::head});  // above everything on the trunk
  } else {
    size_t at = tgt.empty() ? 0 : tgt.size() - 1;  // just above the lowest endpoint
    tgt.insert(tgt.begin() + static_cast<long>(at), endpoint{arrows, role::head});
  }
  return arrow_pattern::from_sequences(false, std::move(seqs));
}

namespace {

// (-1)^q with q = #{arrows between non-trunk strings pointing right-to-left}
long long tree_coefficient(const arrow_pattern& p) {
  int q = 0;
  for (int a = 0; a < p.arrow_count(); ++a) {
    int ts = p.tail(a).comp, hs = p.head(a).comp;
    if (hs != 0 && ts > hs) ++q;
  }
  return (q % 2 == 0) ? 1 : -1;
}

}  // namespace

arrow_polynomial build_Z(int n, int cap_n) {
  if (n < 1) throw error(errc::bad_params, "string count must be positive");
  if (n > cap_n)
    throw error(errc::cap_exceeded, "string count " + std::to_string(n) + " exceeds cap " +
                                        std::to_string(cap_n));

  std::map<std::string, arrow_pattern> level;
  arrow_pattern trunk = arrow_pattern::from_sequences(false, {{}});
  level.emplace(trunk.canonical_key(), trunk);
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, arrow_pattern> grown;
    for (const auto& [key, pat] : level) {
      for (int s = 0; s < pat.strings(); ++s) {
        arrow_pattern q = stack(pat, s, elementary_tree::e);
        grown.emplace(q.canonical_key(), q);
        if (s > 0) {
          arrow_pattern r = stack(pat, s, elementary_tree::ebar);
          grown.emplace(r.canonical_key(), r);
        }
      }
    }
    level = std::move(grown);
  }

  arrow_polynomial poly;
  for (const auto& [key, pat] : level) poly.add(pat, tree_coefficient(pat));
  return poly;
}

arrow_polynomial permute_polynomial(const arrow_polynomial& poly, const std::vector<int>& perm) {
  arrow_polynomial out;
  for (const auto& [key, t] : poly) out.add(t.pattern.permute_strings(perm), t.coeff);
  return out;
}

}  // namespace gausslink
