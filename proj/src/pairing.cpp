#include "gausslink/pairing.hpp"

#include <algorithm>

namespace gausslink {

namespace {

void check_carrier(const arrow_pattern& a, const gauss_diagram& g) {
  int need = a.is_loop() ? 1 : a.strings();
  if (g.components() != need)
    throw error(errc::component_mismatch,
                "pattern carrier has " + std::to_string(need) + " circle(s), diagram has " +
                    std::to_string(g.components()) + " component(s)");
}

struct matcher {
  const arrow_pattern& a;
  const gauss_diagram& g;
  std::vector<int> assign;        // pattern arrow -> diagram arrow (-1 unassigned)
  std::vector<char> used;         // diagram arrow taken
  std::vector<int> cursor;        // per component: next admissible position
  std::vector<std::pair<int, int>> order;  // pattern endpoints as (string, pos)

  long long run() {
    assign.assign(static_cast<size_t>(a.arrow_count()), -1);
    used.assign(static_cast<size_t>(g.arrow_count()), 0);
    cursor.assign(static_cast<size_t>(g.components()), 0);
    for (int s = 0; s < a.strings(); ++s)
      for (int p = 0; p < static_cast<int>(a.sequence(s).size()); ++p)
        order.emplace_back(s, p);
    return dfs(0);
  }

  long long dfs(size_t k) {
    if (k == order.size()) {
      long long prod = 1;
      for (int b : assign) prod *= g.sign(b);
      return prod;
    }
    auto [s, p] = order[k];
    const endpoint ep = a.sequence(s)[static_cast<size_t>(p)];
    const auto& gseq = g.sequence(s);

    if (assign[static_cast<size_t>(ep.arrow)] >= 0) {
      // image is forced: the matched arrow's same-role endpoint
      int b = assign[static_cast<size_t>(ep.arrow)];
      slot loc = (ep.r == role::tail) ? g.tail(b) : g.head(b);
      if (loc.comp != s || loc.pos < cursor[static_cast<size_t>(s)]) return 0;
      int saved = cursor[static_cast<size_t>(s)];
      cursor[static_cast<size_t>(s)] = loc.pos + 1;
      long long total = dfs(k + 1);
      cursor[static_cast<size_t>(s)] = saved;
      return total;
    }

    long long total = 0;
    int saved = cursor[static_cast<size_t>(s)];
    for (int q = saved; q < static_cast<int>(gseq.size()); ++q) {
      const endpoint& gep = gseq[static_cast<size_t>(q)];
      if (gep.r != ep.r || used[static_cast<size_t>(gep.arrow)]) continue;
      assign[static_cast<size_t>(ep.arrow)] = gep.arrow;
      used[static_cast<size_t>(gep.arrow)] = 1;
      cursor[static_cast<size_t>(s)] = q + 1;
      total += dfs(k + 1);
      assign[static_cast<size_t>(ep.arrow)] = -1;
      used[static_cast<size_t>(gep.arrow)] = 0;
    }
    cursor[static_cast<size_t>(s)] = saved;
    return total;
  }
};

}  // namespace

long long pair_count(const arrow_pattern& a, const gauss_diagram& g) {
  check_carrier(a, g);
  matcher m{a, g, {}, {}, {}, {}};
  return m.run();
}

long long pair_oracle(const arrow_pattern& a, const gauss_diagram& g) {
  check_carrier(a, g);
  const int k = a.arrow_count();
  const int n = g.arrow_count();
  if (k > n) return 0;

  // every k-subset of diagram arrows, in every order
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  long long total = 0;
  auto admissible = [&](const std::vector<int>& assign) {
    // role and carrier string, then per-component endpoint order
    for (int s = 0; s < a.strings(); ++s) {
      int prev = -1;
      for (const endpoint& ep : a.sequence(s)) {
        int b = assign[static_cast<size_t>(ep.arrow)];
        slot loc = (ep.r == role::tail) ? g.tail(b) : g.head(b);
        if (loc.comp != s || loc.pos <= prev) return false;
        prev = loc.pos;
      }
    }
    return true;
  };
  while (true) {
    std::vector<int> perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      if (admissible(perm)) {
        long long prod = 1;
        for (int b : perm) prod *= g.sign(b);
        total += prod;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // next k-subset of 0..n-1 in lexicographic order
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return total;
}

long long pair_poly(const arrow_polynomial& poly, const gauss_diagram& g) {
  long long total = 0;
  for (const auto& [key, t] : poly) total += t.coeff * pair_count(t.pattern, g);
  return total;
}

}  // namespace gausslink
